use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::binary::{binomial_is_odd, nu};

/// Whether the hook `h(arm, leg) = (arm + 1, 1^leg)` is chiral: `leg > 0`
/// and `binom(arm + leg - 1, arm)` is odd.
pub fn is_chiral_hook(arm: u64, leg: u64) -> bool {
    leg > 0 && binomial_is_odd(arm + leg - 1, arm)
}

/// Number of chiral hooks with `n` cells.
///
/// The hooks of `n` cells are `h(a, b)` with `a + b = n - 1`; the chiral ones
/// are the odd entries of row `n - 2` of Pascal's triangle, so there are
/// `2^ν(n-2)` of them (none for `n = 1`).
pub fn chiral_hook_count(n: u64) -> BigUint {
    if n < 2 {
        return BigUint::zero();
    }
    BigUint::one() << nu(n - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chirality::is_chiral;
    use crate::partition::Partition;

    #[test]
    fn examples() {
        assert_eq!(chiral_hook_count(7), BigUint::from(4u32));
        assert_eq!(chiral_hook_count(1), BigUint::zero());
        assert!(is_chiral_hook(0, 1));
        for a in 0..20 {
            assert!(!is_chiral_hook(a, 0));
        }
    }

    #[test]
    fn predicate_matches_general_test() {
        for n in 1..40u64 {
            for leg in 0..n {
                let arm = n - 1 - leg;
                let hook = Partition::hook(arm as usize, leg as usize);
                assert_eq!(is_chiral_hook(arm, leg), is_chiral(&hook), "h({arm},{leg})");
            }
        }
    }
}
