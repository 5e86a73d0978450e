//! Chirality of the permutation representations `C[X_λ]`, where `X_λ` is
//! the set of ordered set-partitions of `{1, …, n}` of shape `λ`.
//!
//! Everything reduces to parities of multinomial coefficients, and
//! `binom(n; λ_1, …, λ_l)` is odd exactly when `λ` is *neat*: the binary
//! digits of the parts never collide, i.e. `bin(n)` is the disjoint union
//! of the `bin(λ_i)`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};

use crate::binary::{nu, v2};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The set of positions of the one bits of an integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BinSet {
    positions: BTreeSet<u32>,
}

impl BinSet {
    pub fn positions(&self) -> &BTreeSet<u32> {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn is_subset(&self, other: &BinSet) -> bool {
        self.positions.is_subset(&other.positions)
    }

    pub fn value(&self) -> u64 {
        self.positions.iter().map(|&k| 1u64 << k).sum()
    }
}

pub fn bin_set(m: u64) -> BinSet {
    BinSet {
        positions: (0..64).filter(|&k| m >> k & 1 == 1).collect(),
    }
}

/// Parity test for a multinomial with the given (possibly zero) lower entries.
fn multinomial_odd(parts: impl IntoIterator<Item = u64>) -> bool {
    let mut seen = 0u64;
    for part in parts {
        if seen & part != 0 {
            return false;
        }
        seen |= part;
    }
    true
}

pub fn is_neat(lambda: &Partition) -> bool {
    multinomial_odd(lambda.parts().iter().map(|&p| p as u64))
}

/// Parity of `binom(n; λ_1, …, λ_l)`, the dimension of `C[X_λ]`.
pub fn multinomial_is_odd(lambda: &Partition) -> bool {
    is_neat(lambda)
}

/// Whether `C[X_λ]` is chiral.
///
/// Exactly one of the following must hold:
/// * `λ` has two or three odd parts, and lowering each of them by one
///   leaves a neat partition (of `n - 2` or `n - 3`);
/// * `λ` has a single odd part `a` with `bin(a) ⊆ bin(n - 2)`, and the
///   remaining parts form a neat partition of `n - a`.
pub fn perm_is_chiral(lambda: &Partition) -> bool {
    let n = lambda.size() as u64;
    let parts = lambda.parts().iter().map(|&p| p as u64);
    let odd: Vec<u64> = parts.clone().filter(|p| p % 2 == 1).collect();
    let even = parts.filter(|p| p % 2 == 0);
    match odd.len() {
        2 | 3 => multinomial_odd(even.chain(odd.iter().map(|a| a - 1))),
        1 => {
            let a = odd[0];
            n >= 2 && a & (n - 2) == a && multinomial_odd(even)
        }
        _ => false,
    }
}

/// Reference test: `C[X_λ]` is chiral iff
/// `Σ_{i<j} binom(n-2; λ_1, …, λ_i - 1, …, λ_j - 1, …, λ_l)` is odd.
pub fn perm_is_chiral_oracle(lambda: &Partition) -> bool {
    let parts: Vec<u64> = lambda.parts().iter().map(|&p| p as u64).collect();
    let mut odd_terms = 0usize;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let reduced = parts.iter().enumerate().map(|(t, &p)| {
                if t == i || t == j {
                    p - 1
                } else {
                    p
                }
            });
            if multinomial_odd(reduced) {
                odd_terms += 1;
            }
        }
    }
    odd_terms % 2 == 1
}

/// Bell numbers `B_0, …, B_k` via the Bell triangle.
pub fn bell_numbers(k: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(k + 1);
    let mut row = vec![BigUint::from(1u32)];
    out.push(row[0].clone());
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("rows are non-empty").clone());
        for value in &row {
            let prev = next.last().expect("just pushed").clone();
            next.push(prev + value);
        }
        out.push(next[0].clone());
        row = next;
    }
    out.truncate(k + 1);
    out
}

/// The `k`th Bell number: the number of set-partitions of a `k`-element set.
pub fn bell(k: usize) -> BigUint {
    bell_numbers(k).pop().expect("non-empty")
}

/// `c(n)`, the number of partitions `λ ⊢ n` with `C[X_λ]` chiral.
///
/// For even `n`, with `m = ν(n - 2)`:
/// `c(n) = (B_{m+2} - B_{m+1} + B_m) / 2`.
///
/// For odd `n`, with `m = ν(n - 3)` and `k = v_2(n - 1)`, the three-odd-part
/// term `(B_{m+3} - 3 B_{m+2} + 5 B_{m+1} + 2 B_m) / 6` plus the one-odd-part
/// term `B_{ν(n)+k-2} + B_{ν(n)} - 2 B_{ν(n)-1}`.
pub fn count_perm_chiral(n: u64) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::TooSmall {
            min: 3,
            got: n as usize,
        });
    }
    let count: BigInt = if n.is_multiple_of(2) {
        let m = nu(n - 2) as usize;
        let b = bell_numbers(m + 2);
        let b = |i: usize| BigInt::from(b[i].clone());
        (b(m + 2) - b(m + 1) + b(m)) / 2
    } else {
        let m = nu(n - 3) as usize;
        let k = v2(n - 1)? as usize;
        let w = nu(n) as usize;
        let b = bell_numbers((m + 3).max(w + k));
        let b = |i: usize| BigInt::from(b[i].clone());
        // the coefficient of B_{m+2} is -3; printed elsewhere with index m+3
        let three_odd = (b(m + 3) - 3 * b(m + 2) + 5 * b(m + 1) + 2 * b(m)) / 6;
        let one_odd = b(w + k - 2) + b(w) - 2 * b(w - 1);
        three_odd + one_odd
    };
    Ok(count.to_biguint().expect("counts are non-negative"))
}

/// Number of `λ ⊢ n` with `dim C[X_λ]` odd, i.e. neat partitions: `B_ν(n)`.
pub fn count_perm_odd_dimension(n: u64) -> BigUint {
    bell(nu(n) as usize)
}
