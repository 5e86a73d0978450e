//! Chirality of irreducible representations.
//!
//! `λ ⊢ n` is chiral when `det ∘ ρ_λ` is the sign character. Equivalently
//! `g_λ`, the number of standard tableaux with `2` in the first column, is
//! odd, where
//!
//! ```text
//! g_λ = f_λ (binom(n, 2) - C(λ)) / (2 binom(n, 2))
//! ```
//!
//! and `C(λ)` is the content sum. The same condition has a purely
//! structural form on the 2-core tower (see [`tower_case`]), which is what
//! drives the closed-form counts, enumeration and sampling.

mod config;
mod count;
mod hooks;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::binary::BinaryDecomposition;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tower::{deviation_of_tower, tower_of, CoreTower};

pub use config::{
    chiral_configs, enumerate_chiral, enumerate_self_conjugate_chiral, sample_chiral,
    sample_chiral_seeded, unrank, ChiralConfig, ChiralConfigs, ChiralPartitions, ConfigShape,
    SelfConjugateChiral,
};
pub use count::{
    count_chiral, count_chiral_by_valuation, count_odd, count_self_conjugate_chiral,
    ratio_inequality_holds, CountReport, RatioReport,
};
pub use hooks::{chiral_hook_count, is_chiral_hook};

/// `binom(n, 2) - C(λ)` together with `binom(n, 2)`.
fn content_gap(lambda: &Partition) -> (u128, u128) {
    let n = lambda.size() as i128;
    let pairs = n * (n - 1) / 2;
    let gap = pairs - i128::from(lambda.content_sum());
    debug_assert!(gap >= 0, "content sum never exceeds binom(n, 2)");
    (gap as u128, pairs as u128)
}

/// Whether `λ` is chiral, decided from 2-adic valuations only.
///
/// Partitions of 0 and 1 are never chiral.
pub fn is_chiral(lambda: &Partition) -> bool {
    if lambda.size() < 2 {
        return false;
    }
    let (gap, pairs) = content_gap(lambda);
    if gap == 0 {
        // g_λ = 0
        return false;
    }
    let f_val = i64::from(deviation_of_tower(&tower_of(lambda), lambda.size()));
    let g_val =
        f_val + i64::from(gap.trailing_zeros()) - 1 - i64::from(pairs.trailing_zeros());
    debug_assert!(g_val >= 0, "g_λ is an integer");
    g_val == 0
}

/// The exact value of `g_λ`.
pub fn g_exact(lambda: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::TooSmall { min: 2, got: n });
    }
    let (gap, pairs) = content_gap(lambda);
    let numerator = lambda.dimension() * BigUint::from(gap);
    let (g, rem) = numerator.div_rem(&BigUint::from(2 * pairs));
    if !rem.is_zero() {
        return Err(Error::InexactDivision(lambda.to_string()));
    }
    Ok(g)
}

/// Which of the three chiral tower shapes a partition has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChiralCase {
    /// One size-1 entry in each row `k_1, …, k_r` (plus the root `(1)` when
    /// `ε = 1`), the row-`k_1` entry on a path starting with `ε`.
    /// Here `f_λ` is odd.
    Lone,
    /// Two entries in row `k_1 - v`, one in each half of the tower, one entry
    /// in each row strictly between `k_1 - v` and `k_1` and in each row
    /// `k_2, …, k_r`. Here `v_2(f_λ) = v`.
    Pair { valuation: u32 },
    /// `ε = 1`, root `(2, 1)`, one entry in each row `1, …, k_1 - 1` and
    /// `k_2, …, k_r`. Here `v_2(f_λ) = k_1`.
    Triangle,
}

impl ChiralCase {
    /// `v_2(f_λ)` for partitions in this case.
    pub fn valuation(&self, k1: u32) -> u32 {
        match *self {
            ChiralCase::Lone => 0,
            ChiralCase::Pair { valuation } => valuation,
            ChiralCase::Triangle => k1,
        }
    }

    /// The case holding the chiral partitions of `n` with `v_2(f_λ) = v`.
    pub fn for_valuation(decomposition: &BinaryDecomposition, v: u32) -> Option<ChiralCase> {
        let k1 = decomposition.k1()?;
        match v {
            0 => Some(ChiralCase::Lone),
            v if v < k1 => Some(ChiralCase::Pair { valuation: v }),
            v if v == k1 && decomposition.epsilon() => Some(ChiralCase::Triangle),
            _ => None,
        }
    }
}

impl std::fmt::Display for ChiralCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChiralCase::Lone => write!(f, "case 1 (v2(f) = 0)"),
            ChiralCase::Pair { valuation } => write!(f, "case 2 (v2(f) = {valuation})"),
            ChiralCase::Triangle => write!(f, "case 3 (root (2,1))"),
        }
    }
}

/// Row weights each case prescribes, without trailing zeros.
fn expected_weights(d: &BinaryDecomposition, case: ChiralCase) -> Vec<usize> {
    let k1 = d.k1().expect("non-degenerate") as usize;
    let top = *d.exponents().last().expect("non-degenerate") as usize;
    let mut w = vec![0usize; top + 1];
    w[0] = usize::from(d.epsilon());
    for &k in d.higher_exponents() {
        w[k as usize] = 1;
    }
    match case {
        ChiralCase::Lone => w[k1] = 1,
        ChiralCase::Pair { valuation } => {
            let low = k1 - valuation as usize;
            w[low] = 2;
            w[low + 1..k1].fill(1);
        }
        ChiralCase::Triangle => {
            w[0] = 3;
            w[1..k1].fill(1);
        }
    }
    while w.last() == Some(&0) {
        w.pop();
    }
    w
}

/// Matches a tower of a partition of `n` against the three chiral shapes.
pub fn tower_case_of(tower: &CoreTower, n: usize) -> Option<ChiralCase> {
    if n < 2 {
        return None;
    }
    let d = BinaryDecomposition::of(n as u64);
    let k1 = d.k1()?;
    let weights = tower.row_weights();

    // The lowest non-root row with an entry pins down the only candidate.
    let lowest = (1..weights.len()).find(|&i| weights[i] > 0).map(|i| i as u32);
    let candidate = match lowest {
        _ if weights.first() == Some(&3) => ChiralCase::Triangle,
        Some(row) if row == k1 => ChiralCase::Lone,
        Some(row) if row < k1 => ChiralCase::Pair {
            valuation: k1 - row,
        },
        _ => return None,
    };
    if candidate == ChiralCase::Triangle && !d.epsilon() {
        return None;
    }
    if weights != expected_weights(&d, candidate) {
        return None;
    }
    let leading: Vec<bool> = match candidate {
        ChiralCase::Lone => tower.row(k1).filter_map(|(p, _)| p.first_bit()).collect(),
        ChiralCase::Pair { valuation } => tower
            .row(k1 - valuation)
            .filter_map(|(p, _)| p.first_bit()).collect(),
        ChiralCase::Triangle => return Some(candidate),
    };
    let ok = match candidate {
        ChiralCase::Lone => leading == [d.epsilon()],
        // row order puts the 0-half first
        _ => leading == [false, true],
    };
    ok.then_some(candidate)
}

/// The chiral tower shape of `λ`, if any.
pub fn tower_case(lambda: &Partition) -> Option<ChiralCase> {
    tower_case_of(&tower_of(lambda), lambda.size())
}

/// Whether `λ` is chiral, decided from its 2-core tower alone.
pub fn is_chiral_by_tower(lambda: &Partition) -> bool {
    tower_case(lambda).is_some()
}
