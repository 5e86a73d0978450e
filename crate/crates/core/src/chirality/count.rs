use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::binary::BinaryDecomposition;
use crate::partition::partition_count;

fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// `(v + 1)(k_1 - 2) - binom(v, 2)`, the exponent for `0 < v < k_1`.
fn pair_exponent(k1: u64, v: u64) -> u64 {
    let e = (v as i64 + 1) * (k1 as i64 - 2) - (v * (v - 1) / 2) as i64;
    debug_assert!(e >= 0);
    e as u64
}

/// `b(n)`, the number of chiral partitions of `n`:
///
/// ```text
/// b(n) = 2^(k_2+…+k_r) · (2^(k_1-1) + Σ_{v=1}^{k_1-1} 2^((v+1)(k_1-2) - binom(v,2)) + ε 2^binom(k_1,2))
/// ```
pub fn count_chiral(n: u64) -> BigUint {
    let d = BinaryDecomposition::of(n);
    let Some(k1) = d.k1().map(u64::from) else {
        return BigUint::zero();
    };
    let mut inner = pow2(k1 - 1);
    for v in 1..k1 {
        inner += pow2(pair_exponent(k1, v));
    }
    if d.epsilon() {
        inner += pow2(k1 * (k1 - 1) / 2);
    }
    inner << d.higher_sum()
}

/// `b_v(n)`, the number of chiral partitions of `n` with `v_2(f_λ) = v`.
pub fn count_chiral_by_valuation(n: u64, v: u32) -> BigUint {
    let d = BinaryDecomposition::of(n);
    let Some(k1) = d.k1() else {
        return BigUint::zero();
    };
    let (k1, v64) = (u64::from(k1), u64::from(v));
    let inner = match v64 {
        0 => pow2(k1 - 1),
        v if v < k1 => pow2(pair_exponent(k1, v)),
        v if v == k1 && d.epsilon() => pow2(k1 * (k1 - 1) / 2),
        _ => BigUint::zero(),
    };
    inner << d.higher_sum()
}

/// `a(n) = 2^(k_1+…+k_r)`, the number of partitions of `n` with odd dimension.
pub fn count_odd(n: u64) -> BigUint {
    let d = BinaryDecomposition::of(n);
    pow2(d.exponents().iter().map(|&k| u64::from(k)).sum())
}

/// Number of self-conjugate chiral partitions of `n`: one for `n = 3`,
/// `2^(k-2)` for `n = 2^k + ε` with `k ≥ 2`, none otherwise.
pub fn count_self_conjugate_chiral(n: u64) -> BigUint {
    if n == 3 {
        return BigUint::one();
    }
    match power_plus_epsilon(n) {
        Some(k) => pow2(u64::from(k) - 2),
        None => BigUint::zero(),
    }
}

/// `Some(k)` when `n = 2^k + ε` with `k ≥ 2`.
pub(crate) fn power_plus_epsilon(n: u64) -> Option<u32> {
    let base = n & !1;
    (base.is_power_of_two() && base >= 4).then(|| base.trailing_zeros())
}

/// Every closed-form count for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: u64,
    /// `b(n)`
    pub b: BigUint,
    /// `b_v(n)` for every `v` with a non-zero count.
    pub b_by_valuation: BTreeMap<u32, BigUint>,
    /// `a(n)`
    pub a: BigUint,
    pub self_conjugate: BigUint,
    /// `p(n)`, only when requested (it is the one expensive entry).
    pub p: Option<BigUint>,
    pub hooks: BigUint,
}

impl CountReport {
    pub fn new(n: u64, with_partition_count: bool) -> Self {
        let k1 = BinaryDecomposition::of(n).k1().unwrap_or(0);
        let b_by_valuation = (0..=k1)
            .map(|v| (v, count_chiral_by_valuation(n, v)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        CountReport {
            n,
            b: count_chiral(n),
            b_by_valuation,
            a: count_odd(n),
            self_conjugate: count_self_conjugate_chiral(n),
            p: with_partition_count.then(|| partition_count(n as usize)),
            hooks: super::chiral_hook_count(n),
        }
    }
}

/// Outcome of comparing `a(n)` against `b(n + 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioReport {
    /// `2 b(n+2) ≤ 5 a(n)`
    pub lower_ok: bool,
    /// `a(n) ≤ b(n+2)`
    pub upper_ok: bool,
    /// `a(n) = b(n+2)`
    pub equality: bool,
}

impl RatioReport {
    /// Both bounds hold and equality happens exactly when `4 | n`.
    pub fn consistent(&self, n: u64) -> bool {
        self.lower_ok && self.upper_ok && self.equality == n.is_multiple_of(4)
    }
}

pub fn ratio_inequality_holds(n: u64) -> RatioReport {
    let a = count_odd(n);
    let b = count_chiral(n + 2);
    RatioReport {
        lower_ok: &b * 2u32 <= &a * 5u32,
        upper_ok: a <= b,
        equality: a == b,
    }
}
