//! Binary-expansion helpers: popcount, 2-adic valuation and the
//! `n = ε + 2^k_1 + … + 2^k_r` decomposition every closed form is written in.

use crate::error::{Error, Result};

/// Number of ones in the binary expansion of `m`.
pub fn nu(m: u64) -> u32 {
    m.count_ones()
}

/// Largest `v` such that `2^v` divides `m`.
pub fn v2(m: u64) -> Result<u32> {
    if m == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(m.trailing_zeros())
}

/// `n = ε + 2^k_1 + 2^k_2 + … + 2^k_r` with `ε ∈ {0, 1}` and
/// `0 < k_1 < k_2 < … < k_r`.
///
/// `n = 1` has no exponents at all; such decompositions are *degenerate*
/// and every closed form in [`crate::chirality`] special-cases them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryDecomposition {
    epsilon: bool,
    exponents: Vec<u32>,
}

impl BinaryDecomposition {
    pub fn of(n: u64) -> Self {
        let exponents = (1..64).filter(|&k| n >> k & 1 == 1).collect();
        BinaryDecomposition {
            epsilon: n & 1 == 1,
            exponents,
        }
    }

    pub fn epsilon(&self) -> bool {
        self.epsilon
    }

    pub fn epsilon_bit(&self) -> u64 {
        u64::from(self.epsilon)
    }

    /// `k_1 < … < k_r`.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The lowest exponent `k_1`, absent for degenerate decompositions.
    pub fn k1(&self) -> Option<u32> {
        self.exponents.first().copied()
    }

    /// `k_2, …, k_r`.
    pub fn higher_exponents(&self) -> &[u32] {
        self.exponents.get(1..).unwrap_or(&[])
    }

    /// `k_2 + … + k_r`.
    pub fn higher_sum(&self) -> u64 {
        self.higher_exponents().iter().map(|&k| u64::from(k)).sum()
    }

    pub fn is_degenerate(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn value(&self) -> u64 {
        self.exponents
            .iter()
            .fold(self.epsilon_bit(), |acc, &k| acc + (1u64 << k))
    }
}

/// Parity of `binom(n, k)`: odd exactly when adding `k` and `n - k` has no
/// carries.
pub fn binomial_is_odd(n: u64, k: u64) -> bool {
    k <= n && (k & (n - k)) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn popcount_and_valuation() {
        assert_eq!(nu(7), 3);
        assert_eq!(nu(0), 0);
        assert_eq!(v2(12), Ok(2));
        assert_eq!(v2(1), Ok(0));
        assert_eq!(v2(0), Err(Error::ZeroValuation));
    }

    #[test]
    fn decompositions() {
        let d = BinaryDecomposition::of(15);
        assert!(d.epsilon());
        assert_eq!(d.exponents(), &[1, 2, 3]);

        let d = BinaryDecomposition::of(4097);
        assert!(d.epsilon());
        assert_eq!(d.exponents(), &[12]);

        let d = BinaryDecomposition::of(1);
        assert!(d.epsilon());
        assert!(d.is_degenerate());
        assert_eq!(d.k1(), None);
    }

    #[test]
    fn decomposition_reconstructs() {
        for n in 0..5000 {
            assert_eq!(BinaryDecomposition::of(n).value(), n);
        }
    }

    #[test]
    fn valuation_of_pair_count_is_k1_minus_one() {
        for n in 2u64..3000 {
            let k1 = BinaryDecomposition::of(n).k1().unwrap();
            assert_eq!(v2(n * (n - 1) / 2).unwrap(), k1 - 1, "n = {n}");
        }
    }

    #[test]
    fn binomial_parity_matches_pascal() {
        let mut row = vec![1u64];
        for n in 0..40u64 {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(binomial_is_odd(n, k as u64), c % 2 == 1);
            }
            let mut next = vec![1u64; row.len() + 1];
            for k in 1..row.len() {
                next[k] = (row[k - 1] + row[k]) % 1024;
            }
            row = next;
        }
    }
}
