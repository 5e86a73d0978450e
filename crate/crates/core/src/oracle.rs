//! Brute-force reference values, independent of the hook-length formula and
//! of the content-sum identity. Compiled only for tests and under the
//! `oracle` feature.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest size [`g_tableaux`] will enumerate.
pub const TABLEAU_CAP: usize = 14;

/// Memoised Young's-lattice recursion `x_λ = Σ_{μ ∈ λ⁻} x_μ` with fixed
/// initial values.
struct Lattice {
    memo: HashMap<Partition, BigUint>,
}

impl Lattice {
    fn with_initial(initial: impl IntoIterator<Item = (Partition, BigUint)>) -> Self {
        Lattice {
            memo: initial.into_iter().collect(),
        }
    }

    fn value(&mut self, lambda: &Partition) -> BigUint {
        if let Some(v) = self.memo.get(lambda) {
            return v.clone();
        }
        let total = lambda
            .predecessors()
            .iter()
            .map(|mu| self.value(mu))
            .fold(BigUint::zero(), |acc, v| acc + v);
        self.memo.insert(lambda.clone(), total.clone());
        total
    }
}

/// `f_λ` from `f_λ = Σ_{μ ∈ λ⁻} f_μ` and `f_(1) = 1` (`f_∅ = 1`).
pub fn f_recursive(lambda: &Partition) -> BigUint {
    if lambda.is_empty() {
        return BigUint::one();
    }
    let one = Partition::hook(0, 0);
    Lattice::with_initial([(one, BigUint::one())]).value(lambda)
}

/// `g_λ` from the same recursion for `|λ| > 2`, with `g_(2) = 0` and
/// `g_(1,1) = 1`.
pub fn g_recursive(lambda: &Partition) -> Result<BigUint> {
    if lambda.size() < 2 {
        return Err(Error::TooSmall {
            min: 2,
            got: lambda.size(),
        });
    }
    Ok(Lattice::with_initial([
        (Partition::hook(1, 0), BigUint::zero()),
        (Partition::hook(0, 1), BigUint::one()),
    ])
    .value(lambda))
}

/// Number of standard tableaux of shape `λ` with the entry `2` in the first
/// column, by listing every standard tableau.
pub fn g_tableaux(lambda: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::TooSmall { min: 2, got: n });
    }
    if n > TABLEAU_CAP {
        return Err(Error::TooLarge {
            cap: TABLEAU_CAP,
            got: n,
        });
    }
    // Place 1, 2, …, n one at a time; `filled[i]` is the current row length.
    fn fill(target: &[usize], filled: &mut Vec<usize>, next: usize, two_in_col: bool) -> u64 {
        if next > target.iter().sum::<usize>() {
            return u64::from(two_in_col);
        }
        let mut total = 0;
        for row in 0..target.len() {
            let len = filled[row];
            let fits = len < target[row] && (row == 0 || filled[row - 1] > len);
            if fits {
                filled[row] += 1;
                let flag = if next == 2 { row == 1 } else { two_in_col };
                total += fill(target, filled, next + 1, flag);
                filled[row] -= 1;
            }
        }
        total
    }
    let mut filled = vec![0; lambda.len()];
    Ok(BigUint::from(fill(lambda.parts(), &mut filled, 1, false)))
}

/// `n! / (λ_1! ⋯ λ_l!)`.
pub fn multinomial_exact(lambda: &Partition) -> BigUint {
    let factorial = |m: usize| (1..=m).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
    let denominator = lambda
        .parts()
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * factorial(p));
    factorial(lambda.size()) / denominator
}
