use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

use chiral::binary::{nu, BinaryDecomposition};
use chiral::chirality::{
    count_chiral, g_exact, is_chiral, is_chiral_by_tower, sample_chiral_seeded, tower_case,
    unrank,
};
use chiral::oracle::multinomial_exact;
use chiral::partition::{from_core_and_quotient, p_core, p_quotient};
use chiral::perm::{multinomial_is_odd, perm_is_chiral, perm_is_chiral_oracle};
use chiral::tower::{deviation, partition_of, tower_of};
use chiral::{FrobeniusCoords, Partition};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive parts")
    })
}

proptest! {
    #[test]
    fn core_quotient_roundtrip(lambda in partition(12, 15), p in 2usize..8) {
        let core = p_core(&lambda, p).unwrap();
        let quotient = p_quotient(&lambda, p).unwrap();
        let weight: usize = quotient.iter().map(Partition::size).sum();
        prop_assert_eq!(lambda.size(), core.size() + p * weight);
        prop_assert_eq!(from_core_and_quotient(&core, &quotient, p).unwrap(), lambda);
    }

    #[test]
    fn tower_roundtrip_and_weights(lambda in partition(20, 30)) {
        let tower = tower_of(&lambda);
        prop_assert_eq!(tower.size(), lambda.size());
        prop_assert_eq!(tower_of(&lambda.conjugate()), tower.mirrored());
        prop_assert_eq!(partition_of(&tower), lambda);
    }

    #[test]
    fn deviation_is_valuation_of_dimension(lambda in partition(10, 12)) {
        let v = lambda.dimension().trailing_zeros().unwrap_or(0) as u32;
        prop_assert_eq!(deviation(&lambda), v);
    }

    #[test]
    fn conjugation_and_contents(lambda in partition(15, 15)) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.conjugate(), lambda.clone());
        prop_assert_eq!(conj.content_sum(), -lambda.content_sum());
        prop_assert_eq!(conj.dimension(), lambda.dimension());
    }

    #[test]
    fn frobenius_roundtrip(lambda in partition(15, 15)) {
        prop_assume!(!lambda.is_empty());
        let coords = FrobeniusCoords::of(&lambda).unwrap();
        prop_assert_eq!(coords.size(), lambda.size());
        prop_assert_eq!(coords.to_partition(), lambda.clone());
        let text = coords.to_string();
        prop_assert_eq!(text.parse::<FrobeniusCoords>().unwrap(), coords);
    }

    #[test]
    fn partition_text_roundtrip(lambda in partition(15, 40)) {
        prop_assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
    }

    #[test]
    fn chirality_criteria_agree(lambda in partition(14, 14)) {
        prop_assume!(lambda.size() >= 2);
        prop_assert_eq!(is_chiral(&lambda), is_chiral_by_tower(&lambda));
    }

    #[test]
    fn g_parity_decides_chirality(lambda in partition(8, 8)) {
        prop_assume!(lambda.size() >= 2 && lambda.size() <= 40);
        prop_assert_eq!(g_exact(&lambda).unwrap().bit(0), is_chiral(&lambda));
    }

    #[test]
    fn valuation_range_of_chiral(n in 2u64..200, seed: u64) {
        prop_assume!(!count_chiral(n).is_zero());
        let lambda = sample_chiral_seeded(n, None, seed).unwrap();
        prop_assert!(is_chiral_by_tower(&lambda));
        let d = BinaryDecomposition::of(lambda.size() as u64);
        let k1 = d.k1().unwrap();
        let top = if d.epsilon() { k1 } else { k1 - 1 };
        prop_assert!(deviation(&lambda) <= top);
        let case = tower_case(&lambda).unwrap();
        prop_assert_eq!(case.valuation(k1), deviation(&lambda));
    }

    #[test]
    fn samples_are_chiral(n in 2u64..6000, seed: u64, pick in 0u32..16) {
        prop_assume!(!count_chiral(n).is_zero());
        let lambda = sample_chiral_seeded(n, None, seed).unwrap();
        prop_assert_eq!(lambda.size() as u64, n);
        prop_assert!(is_chiral(&lambda));

        let k1 = BinaryDecomposition::of(n).k1().unwrap();
        let v = pick % (k1 + 1);
        if let Ok(lambda) = sample_chiral_seeded(n, Some(v), seed) {
            prop_assert!(is_chiral(&lambda));
            prop_assert_eq!(deviation(&lambda), v);
        }
    }

    #[test]
    fn unrank_covers_the_count(n in 2u64..3000, seed: u64) {
        let total = count_chiral(n);
        prop_assume!(!total.is_zero());
        let rank = BigUint::from(seed) % &total;
        let config = unrank(n, None, &rank).unwrap();
        let lambda = config.partition();
        prop_assert_eq!(lambda.size() as u64, n);
        prop_assert!(is_chiral(&lambda));
        prop_assert!(unrank(n, None, &total).is_none());
    }

    #[test]
    fn multinomial_parity(lambda in partition(10, 12)) {
        prop_assert_eq!(multinomial_is_odd(&lambda), multinomial_exact(&lambda).bit(0));
    }

    /// `binom(n; n_1, …, n_m) ≡ binom(n-1; n_1 - 1, n_2, …, n_m)` mod 2 when
    /// `n_1` is odd and the rest are even.
    #[test]
    fn dropping_a_cell_from_the_odd_part(
        half_odd in 0usize..20,
        halves in prop::collection::vec(1usize..10, 0..6),
    ) {
        let first = 2 * half_odd + 1;
        let mut parts: Vec<usize> = halves.iter().map(|h| 2 * h).collect();
        prop_assume!(first + parts.iter().sum::<usize>() <= 40);
        let mut lowered = parts.clone();
        parts.push(first);
        if first > 1 {
            lowered.push(first - 1);
        }
        let sorted = |mut v: Vec<usize>| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        };
        let full = multinomial_exact(&sorted(parts));
        let reduced = multinomial_exact(&sorted(lowered));
        prop_assert_eq!(full.bit(0), reduced.bit(0));
    }

    #[test]
    fn perm_characterization_matches_oracle(lambda in partition(12, 20)) {
        prop_assume!(lambda.size() >= 2);
        prop_assert_eq!(perm_is_chiral(&lambda), perm_is_chiral_oracle(&lambda));
    }

    #[test]
    fn hook_dimension_is_binomial(arm in 0usize..60, leg in 0usize..60) {
        let hook = Partition::hook(arm, leg);
        prop_assert_eq!(hook.size(), arm + leg + 1);
        let n = (arm + leg) as u64;
        let expected = (1..=leg as u64).fold(BigUint::from(1u8), |acc, j| {
            acc * BigUint::from(n - leg as u64 + j) / BigUint::from(j)
        });
        prop_assert_eq!(hook.dimension(), expected);
    }

    #[test]
    fn popcount_additivity(a in 0u64..1 << 40, b in 0u64..1 << 40) {
        prop_assert!(nu(a + b) <= nu(a) + nu(b));
    }
}
