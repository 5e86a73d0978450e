//! Chiral tower configurations, and enumeration and sampling through them.
//!
//! For fixed `n` each [`ChiralCase`] is a product of independent choices of
//! tower positions, every factor a power of two. A configuration is a tuple
//! of digits, one per factor, so ranks are bit strings: the first factor
//! occupies the most significant bits. Enumeration walks the cases in the
//! order `Lone`, `Pair` with `v` descending, `Triangle`, and within a case
//! the digit tuples lexicographically.

use num_bigint::{BigUint, RandBigInt};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::count::power_plus_epsilon;
use super::ChiralCase;
use crate::binary::BinaryDecomposition;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tower::{partition_of, BinaryPath, CoreTower};

/// The shape-specific part of a [`ChiralConfig`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConfigShape {
    /// Row-`k_1` entry; its path starts with `ε`.
    Lone { path: BinaryPath },
    /// Two entries in row `k_1 - v`, `left` starting with 0 and `right`
    /// with 1, then one entry per row `k_1 - v + 1, …, k_1 - 1`.
    Pair {
        valuation: u32,
        left: BinaryPath,
        right: BinaryPath,
        upper_paths: Vec<BinaryPath>,
    },
    /// Root `(2, 1)` and one entry per row `1, …, k_1 - 1`.
    Triangle { upper_paths: Vec<BinaryPath> },
}

/// The positions of the non-empty entries in the 2-core tower of a chiral
/// partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChiralConfig {
    pub epsilon: bool,
    pub shape: ConfigShape,
    /// One path per row `k_2, …, k_r`.
    pub high_paths: Vec<BinaryPath>,
}

impl ChiralConfig {
    pub fn case(&self) -> ChiralCase {
        match self.shape {
            ConfigShape::Lone { .. } => ChiralCase::Lone,
            ConfigShape::Pair { valuation, .. } => ChiralCase::Pair { valuation },
            ConfigShape::Triangle { .. } => ChiralCase::Triangle,
        }
    }

    pub fn tower(&self) -> CoreTower {
        let mut tower = CoreTower::new();
        if self.epsilon {
            tower.set(BinaryPath::ROOT, 1);
        }
        let mut singles: Vec<BinaryPath> = self.high_paths.clone();
        match &self.shape {
            ConfigShape::Lone { path } => singles.push(*path),
            ConfigShape::Pair {
                left,
                right,
                upper_paths,
                ..
            } => {
                singles.extend([*left, *right]);
                singles.extend(upper_paths);
            }
            ConfigShape::Triangle { upper_paths } => {
                tower.set(BinaryPath::ROOT, 2);
                singles.extend(upper_paths);
            }
        }
        for path in singles {
            tower.set(path, 1);
        }
        tower
    }

    pub fn partition(&self) -> Partition {
        partition_of(&self.tower())
    }
}

/// One case's factor structure: every factor has `2^bits[i]` choices.
#[derive(Debug, Clone)]
struct Stratum {
    case: ChiralCase,
    bits: Vec<u32>,
}

impl Stratum {
    fn new(d: &BinaryDecomposition, case: ChiralCase) -> Stratum {
        let k1 = d.k1().expect("strata exist only for non-degenerate n");
        let mut bits = match case {
            ChiralCase::Lone => vec![k1 - 1],
            ChiralCase::Pair { valuation } => {
                let low = k1 - valuation;
                let mut bits = vec![low - 1, low - 1];
                bits.extend(low + 1..k1);
                bits
            }
            ChiralCase::Triangle => (1..k1).collect(),
        };
        bits.extend(d.higher_exponents());
        Stratum { case, bits }
    }

    fn total_bits(&self) -> u64 {
        self.bits.iter().map(|&b| u64::from(b)).sum()
    }

    fn count(&self) -> BigUint {
        BigUint::from(1u32) << self.total_bits()
    }

    fn config(&self, d: &BinaryDecomposition, digits: &[u64]) -> ChiralConfig {
        let k1 = d.k1().expect("non-degenerate");
        let highs = d.higher_exponents();
        let (local, high) = digits.split_at(digits.len() - highs.len());
        let high_paths = highs
            .iter()
            .zip(high)
            .map(|(&k, &x)| BinaryPath::new(k, x))
            .collect();
        let shape = match self.case {
            ChiralCase::Lone => ConfigShape::Lone {
                path: BinaryPath::new(k1, d.epsilon_bit() << (k1 - 1) | local[0]),
            },
            ChiralCase::Pair { valuation } => {
                let low = k1 - valuation;
                ConfigShape::Pair {
                    valuation,
                    left: BinaryPath::new(low, local[0]),
                    right: BinaryPath::new(low, 1 << (low - 1) | local[1]),
                    upper_paths: (low + 1..k1)
                        .zip(&local[2..])
                        .map(|(row, &x)| BinaryPath::new(row, x))
                        .collect(),
                }
            }
            ChiralCase::Triangle => ConfigShape::Triangle {
                upper_paths: (1..k1)
                    .zip(local)
                    .map(|(row, &x)| BinaryPath::new(row, x))
                    .collect(),
            },
        };
        ChiralConfig {
            epsilon: d.epsilon(),
            shape,
            high_paths,
        }
    }

    /// Splits a rank into digits, most significant factor first.
    fn digits(&self, rank: &BigUint) -> Vec<u64> {
        let mut rest = rank.clone();
        let mut digits = vec![0u64; self.bits.len()];
        for (slot, &b) in self.bits.iter().enumerate().rev() {
            let mask = (BigUint::from(1u32) << b) - 1u32;
            digits[slot] = (&rest & &mask).to_u64().expect("digit fits in 64 bits");
            rest >>= b;
        }
        digits
    }
}

fn strata(n: u64, valuation: Option<u32>) -> (BinaryDecomposition, Vec<Stratum>) {
    let d = BinaryDecomposition::of(n);
    let cases: Vec<ChiralCase> = match (d.k1(), valuation) {
        (None, _) => Vec::new(),
        (Some(_), Some(v)) => ChiralCase::for_valuation(&d, v).into_iter().collect(),
        (Some(k1), None) => {
            let mut cases = vec![ChiralCase::Lone];
            cases.extend((1..k1).rev().map(|v| ChiralCase::Pair { valuation: v }));
            if d.epsilon() {
                cases.push(ChiralCase::Triangle);
            }
            cases
        }
    };
    let strata = cases.into_iter().map(|c| Stratum::new(&d, c)).collect();
    (d, strata)
}

/// The configuration of the given rank in the canonical enumeration order
/// (restricted to `v_2(f_λ) = valuation` if given).
pub fn unrank(n: u64, valuation: Option<u32>, rank: &BigUint) -> Option<ChiralConfig> {
    let (d, strata) = strata(n, valuation);
    let mut rank = rank.clone();
    for stratum in &strata {
        let count = stratum.count();
        if rank < count {
            return Some(stratum.config(&d, &stratum.digits(&rank)));
        }
        rank -= count;
    }
    None
}

/// Chiral configurations of `n` in canonical order.
pub struct ChiralConfigs {
    decomposition: BinaryDecomposition,
    strata: std::vec::IntoIter<Stratum>,
    current: Option<(Stratum, Vec<u64>)>,
}

impl Iterator for ChiralConfigs {
    type Item = ChiralConfig;

    fn next(&mut self) -> Option<ChiralConfig> {
        loop {
            if let Some((stratum, digits)) = &mut self.current {
                let out = stratum.config(&self.decomposition, digits);
                // odometer step, last factor fastest
                let mut carried = true;
                for (digit, &b) in digits.iter_mut().zip(&stratum.bits).rev() {
                    let top = if b == 64 { u64::MAX } else { (1u64 << b) - 1 };
                    if *digit < top {
                        *digit += 1;
                        carried = false;
                        break;
                    }
                    *digit = 0;
                }
                if carried {
                    self.current = None;
                }
                return Some(out);
            }
            let stratum = self.strata.next()?;
            let digits = vec![0; stratum.bits.len()];
            self.current = Some((stratum, digits));
        }
    }
}

pub fn chiral_configs(n: u64, valuation: Option<u32>) -> ChiralConfigs {
    let (decomposition, strata) = strata(n, valuation);
    ChiralConfigs {
        decomposition,
        strata: strata.into_iter(),
        current: None,
    }
}

/// Chiral partitions of `n` in canonical order.
pub struct ChiralPartitions(ChiralConfigs);

impl Iterator for ChiralPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.0.next().map(|c| c.partition())
    }
}

/// Every chiral partition of `n` exactly once, optionally only those with
/// `v_2(f_λ) = valuation`.
pub fn enumerate_chiral(n: u64, valuation: Option<u32>) -> ChiralPartitions {
    ChiralPartitions(chiral_configs(n, valuation))
}

/// A uniformly random chiral partition of `n` (with `v_2(f_λ) = valuation`
/// if given): a uniform rank is drawn and unranked.
pub fn sample_chiral<R: Rng + ?Sized>(
    n: u64,
    valuation: Option<u32>,
    rng: &mut R,
) -> Result<Partition> {
    let (_, strata) = strata(n, valuation);
    let total: BigUint = strata.iter().map(Stratum::count).sum();
    if total.is_zero() {
        return Err(Error::EmptyStratum { n, valuation });
    }
    let rank = rng.gen_biguint_below(&total);
    let config = unrank(n, valuation, &rank).expect("rank below total");
    Ok(config.partition())
}

/// [`sample_chiral`] driven by a ChaCha8 generator seeded with `seed`.
pub fn sample_chiral_seeded(n: u64, valuation: Option<u32>, seed: u64) -> Result<Partition> {
    sample_chiral(n, valuation, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Self-conjugate chiral partitions of `n`.
///
/// For `n = 2^k + ε` with `k ≥ 2` these have two entries in row `k - 1`
/// on complementary paths; `n = 3` contributes `(2, 1)`.
pub struct SelfConjugateChiral {
    epsilon: bool,
    row: u32,
    next: u64,
    end: u64,
    triangle: Option<Partition>,
}

impl Iterator for SelfConjugateChiral {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if let Some(p) = self.triangle.take() {
            return Some(p);
        }
        if self.next >= self.end {
            return None;
        }
        let left = BinaryPath::new(self.row, self.next);
        self.next += 1;
        let mut tower = CoreTower::new();
        if self.epsilon {
            tower.set(BinaryPath::ROOT, 1);
        }
        tower.set(left, 1);
        tower.set(left.complement(), 1);
        Some(partition_of(&tower))
    }
}

pub fn enumerate_self_conjugate_chiral(n: u64) -> SelfConjugateChiral {
    let mut it = SelfConjugateChiral {
        epsilon: n & 1 == 1,
        row: 0,
        next: 0,
        end: 0,
        triangle: None,
    };
    if n == 3 {
        it.triangle = Some(Partition::staircase(2));
    } else if let Some(k) = power_plus_epsilon(n) {
        it.row = k - 1;
        it.end = 1 << (k - 2);
    }
    it
}
