//! Exhaustive checks over every partition of small n.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;

use chiral::binary::nu;
use chiral::chirality::{
    count_chiral, count_chiral_by_valuation, count_odd, enumerate_chiral,
    enumerate_self_conjugate_chiral, is_chiral,
};
use chiral::oracle::f_recursive;
use chiral::partition::{p_quotient, partition_counts};
use chiral::perm::perm_is_chiral;
use chiral::tower::{deviation, partition_of, tower_of, truncated_core};
use chiral::{Partition, Partitions};

fn v2(x: &BigUint) -> u32 {
    x.trailing_zeros().unwrap_or(0) as u32
}

#[test]
fn iterator_agrees_with_partition_function() {
    let p = partition_counts(40);
    for n in 0..=40usize {
        let listed: Vec<Partition> = Partitions::new(n).collect();
        assert_eq!(BigUint::from(listed.len()), p[n], "p({n})");
        let distinct: HashSet<_> = listed.iter().collect();
        assert_eq!(distinct.len(), listed.len());
        assert!(listed.iter().all(|l| l.size() == n));
    }
}

#[test]
fn dimension_satisfies_branching_rule() {
    for n in 1..=18 {
        for lambda in Partitions::new(n) {
            let below: BigUint = lambda.predecessors().iter().map(Partition::dimension).sum();
            assert_eq!(lambda.dimension(), below, "{lambda}");
        }
    }
    let lambda: Partition = "[4,2,1]".parse().unwrap();
    assert_eq!(f_recursive(&lambda), lambda.dimension());
}

#[test]
fn quotient_of_conjugate_swaps_components() {
    for n in 1..=16 {
        for lambda in Partitions::new(n) {
            let q = p_quotient(&lambda, 2).unwrap();
            let qc = p_quotient(&lambda.conjugate(), 2).unwrap();
            assert_eq!(qc[0], q[1].conjugate(), "{lambda}");
            assert_eq!(qc[1], q[0].conjugate(), "{lambda}");
        }
    }
}

#[test]
fn valuation_of_core_identity() {
    for n in 1..=14 {
        for lambda in Partitions::new(n) {
            let tower = tower_of(&lambda);
            for i in 1..=3 {
                let core = truncated_core(&lambda, i);
                let mu = partition_of(&tower.without_rows_below(i));
                assert_eq!(mu.size() + core.size(), n);
                let rhs = i64::from(v2(&core.dimension()))
                    + i64::from(v2(&mu.dimension()))
                    + i64::from(nu(mu.size() as u64))
                    + i64::from(nu(core.size() as u64))
                    - i64::from(nu(n as u64));
                assert_eq!(i64::from(v2(&lambda.dimension())), rhs, "{lambda}, i = {i}");
            }
        }
    }
}

#[test]
fn odd_dimension_count() {
    for n in 1..=26usize {
        let brute = Partitions::new(n).filter(|l| deviation(l) == 0).count();
        assert_eq!(count_odd(n as u64), BigUint::from(brute), "a({n})");
    }
}

#[test]
fn enumeration_lists_each_chiral_partition_once() {
    for n in 1..=40u64 {
        let listed: Vec<Partition> = enumerate_chiral(n, None).collect();
        assert_eq!(BigUint::from(listed.len()), count_chiral(n), "n = {n}");
        let distinct: HashSet<_> = listed.iter().collect();
        assert_eq!(distinct.len(), listed.len(), "n = {n}");
        for lambda in &listed {
            assert_eq!(lambda.size() as u64, n);
            assert!(is_chiral(lambda), "{lambda}");
        }
        for v in 0..8 {
            let by_v = enumerate_chiral(n, Some(v)).count();
            assert_eq!(BigUint::from(by_v), count_chiral_by_valuation(n, v), "n = {n}, v = {v}");
        }
    }
}

#[test]
fn valuation_counts_sum_to_total() {
    for n in 1..=4096u64 {
        let total: BigUint = (0..=13).map(|v| count_chiral_by_valuation(n, v)).sum();
        assert_eq!(total, count_chiral(n), "n = {n}");
    }
}

#[test]
fn self_conjugate_enumeration_matches_filter() {
    for n in [3usize, 4, 5, 8, 9, 16, 17] {
        let listed: HashSet<Partition> = enumerate_self_conjugate_chiral(n as u64).collect();
        let brute: HashSet<Partition> = Partitions::new(n)
            .filter(|l| l.is_self_conjugate() && is_chiral(l))
            .collect();
        assert_eq!(listed, brute, "n = {n}");
    }
}

#[test]
fn odd_parts_of_perm_chiral_partitions() {
    for n in 2..=30usize {
        for lambda in Partitions::new(n).filter(perm_is_chiral) {
            let odd = lambda.parts().iter().filter(|&&p| p % 2 == 1).count();
            if n % 2 == 0 {
                assert_eq!(odd, 2, "{lambda}");
            } else {
                assert!(odd == 1 || odd == 3, "{lambda}");
            }
        }
    }
}

#[test]
fn no_chiral_partitions_of_one() {
    assert!(count_chiral(1).is_zero());
    assert!(!is_chiral(&Partition::hook(0, 0)));
}
