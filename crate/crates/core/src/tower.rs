//! 2-core towers.
//!
//! Iterating the 2-core / 2-quotient decomposition produces a binary tree
//! of 2-cores: the root is `core(λ, 2)`, and if `quo(λ_x, 2) = (λ_x0, λ_x1)`
//! then the entry at path `xδ` is `core(λ_xδ, 2)`. Row `i` holds the entries
//! at paths of length `i`. Every 2-core is a staircase `(m, m-1, …, 1)`, so
//! entries are stored as their staircase index `m`.

use std::collections::BTreeMap;
use std::fmt;

use crate::binary::nu;
use crate::error::{Error, Result};
use crate::partition::abacus_assemble;
use crate::partition::{p_core, p_quotient, Partition};

/// A finite word over `{0, 1}`, ordered first by length, then
/// lexicographically (`0 < 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryPath {
    // field order gives the (length, lexicographic) ordering
    len: u8,
    bits: u64,
}

impl BinaryPath {
    pub const ROOT: BinaryPath = BinaryPath { len: 0, bits: 0 };

    /// The path of length `len` spelling the low `len` bits of `bits`,
    /// most significant first.
    pub fn new(len: u32, bits: u64) -> Self {
        assert!(len <= 64, "paths are at most 64 bits long");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        assert!(bits & !mask == 0, "bits {bits:#b} do not fit in {len} places");
        BinaryPath {
            len: len as u8,
            bits,
        }
    }

    pub fn len(&self) -> u32 {
        u32::from(self.len)
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn first_bit(&self) -> Option<bool> {
        (self.len > 0).then(|| self.bits >> (self.len - 1) & 1 == 1)
    }

    pub fn child(&self, bit: bool) -> BinaryPath {
        BinaryPath::new(self.len() + 1, self.bits << 1 | u64::from(bit))
    }

    /// Bitwise complement, keeping the length.
    pub fn complement(&self) -> BinaryPath {
        let mask = if self.len == 64 {
            u64::MAX
        } else {
            (1u64 << self.len) - 1
        };
        BinaryPath::new(self.len(), !self.bits & mask)
    }

    /// Drops the first bit.
    fn tail(&self) -> BinaryPath {
        let len = self.len() - 1;
        BinaryPath::new(len, self.bits & ((1u64 << len) - 1))
    }
}

impl fmt::Display for BinaryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            return write!(f, "-");
        }
        write!(f, "{:0width$b}", self.bits, width = self.len as usize)
    }
}

impl fmt::Debug for BinaryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPath({self})")
    }
}

/// Non-empty entries of a 2-core tower, keyed by path.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoreTower {
    entries: BTreeMap<BinaryPath, usize>,
}

impl CoreTower {
    pub fn new() -> Self {
        CoreTower::default()
    }

    /// Sets the entry at `path` to the staircase `(m, …, 1)`; `m = 0`
    /// clears it.
    pub fn set(&mut self, path: BinaryPath, m: usize) {
        if m == 0 {
            self.entries.remove(&path);
        } else {
            self.entries.insert(path, m);
        }
    }

    /// Builds a tower from explicit partitions, which must all be 2-cores.
    pub fn from_partitions<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BinaryPath, Partition)>,
    {
        let mut tower = CoreTower::new();
        for (path, entry) in entries {
            let m = entry.staircase_index().ok_or_else(|| Error::NotAStaircase {
                path: path.to_string(),
                entry: entry.to_string(),
            })?;
            tower.set(path, m);
        }
        Ok(tower)
    }

    /// Staircase index at `path` (0 when the entry is empty).
    pub fn get(&self, path: BinaryPath) -> usize {
        self.entries.get(&path).copied().unwrap_or(0)
    }

    pub fn entry(&self, path: BinaryPath) -> Partition {
        Partition::staircase(self.get(path))
    }

    pub fn entries(&self) -> impl Iterator<Item = (BinaryPath, usize)> + '_ {
        self.entries.iter().map(|(&p, &m)| (p, m))
    }

    /// Non-empty entries of row `i`, left to right.
    pub fn row(&self, i: u32) -> impl Iterator<Item = (BinaryPath, usize)> + '_ {
        let start = BinaryPath::new(i, 0);
        self.entries
            .range(start..)
            .take_while(move |(p, _)| p.len() == i)
            .map(|(&p, &m)| (p, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Index of the deepest non-empty row.
    pub fn depth(&self) -> Option<u32> {
        self.entries.keys().next_back().map(BinaryPath::len)
    }

    /// `w_i`: total size of the entries of row `i`, for every row up to the
    /// deepest non-empty one.
    pub fn row_weights(&self) -> Vec<usize> {
        let mut weights = vec![0; self.depth().map_or(0, |d| d as usize + 1)];
        for (path, m) in self.entries() {
            weights[path.len() as usize] += m * (m + 1) / 2;
        }
        weights
    }

    /// `Σ w_i 2^i`, the size of the partition this tower encodes.
    pub fn size(&self) -> usize {
        self.row_weights()
            .iter()
            .enumerate()
            .map(|(i, w)| w << i)
            .sum()
    }

    /// Keeps only rows `< i`.
    pub fn truncated(&self, i: u32) -> CoreTower {
        CoreTower {
            entries: self
                .entries
                .iter()
                .filter(|(p, _)| p.len() < i)
                .map(|(&p, &m)| (p, m))
                .collect(),
        }
    }

    /// Clears rows `< i`, keeping everything else in place.
    pub fn without_rows_below(&self, i: u32) -> CoreTower {
        CoreTower {
            entries: self
                .entries
                .iter()
                .filter(|(p, _)| p.len() >= i)
                .map(|(&p, &m)| (p, m))
                .collect(),
        }
    }

    /// Reflection about the vertical axis: the tower of the conjugate.
    pub fn mirrored(&self) -> CoreTower {
        CoreTower {
            entries: self
                .entries
                .iter()
                .map(|(p, &m)| (p.complement(), m))
                .collect(),
        }
    }

    /// One line per row, e.g. `row2: 01:1`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..=self.depth().unwrap_or(0) {
            out.push_str(&format!("row{i}:"));
            for (path, m) in self.row(i) {
                out.push_str(&format!(" {path}:{m}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for CoreTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// The 2-core tower of `lambda`.
pub fn tower_of(lambda: &Partition) -> CoreTower {
    let mut tower = CoreTower::new();
    let mut stack = vec![(BinaryPath::ROOT, lambda.clone())];
    while let Some((path, mu)) = stack.pop() {
        if mu.is_empty() {
            continue;
        }
        let core = p_core(&mu, 2).expect("modulus 2 is valid");
        let m = core.staircase_index().expect("2-cores are staircases");
        tower.set(path, m);
        let [zero, one]: [Partition; 2] = p_quotient(&mu, 2)
            .expect("modulus 2 is valid")
            .try_into()
            .expect("2-quotients have two components");
        stack.push((path.child(false), zero));
        stack.push((path.child(true), one));
    }
    tower
}

/// The unique partition with the given 2-core tower.
pub fn partition_of(tower: &CoreTower) -> Partition {
    let entries: Vec<(BinaryPath, usize)> = tower.entries().collect();
    build(&entries)
}

fn build(entries: &[(BinaryPath, usize)]) -> Partition {
    if entries.is_empty() {
        return Partition::empty();
    }
    let mut root = 0;
    let mut zero = Vec::new();
    let mut one = Vec::new();
    for &(path, m) in entries {
        match path.first_bit() {
            None => root = m,
            Some(false) => zero.push((path.tail(), m)),
            Some(true) => one.push((path.tail(), m)),
        }
    }
    let quotient = [build(&zero), build(&one)];
    abacus_assemble(&Partition::staircase(root), &quotient, 2)
}

/// `e_2(λ) = Σ w_i - ν(|λ|)`, which equals the 2-adic valuation of the
/// dimension of `λ`.
pub fn deviation(lambda: &Partition) -> u32 {
    deviation_of_tower(&tower_of(lambda), lambda.size())
}

pub(crate) fn deviation_of_tower(tower: &CoreTower, n: usize) -> u32 {
    let total: usize = tower.row_weights().iter().sum();
    (total - nu(n as u64) as usize) as u32
}

/// `core(λ, 2^i)`, read off the tower by emptying rows `i` and below.
pub fn truncated_core(lambda: &Partition, i: u32) -> Partition {
    partition_of(&tower_of(lambda).truncated(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn path(s: &str) -> BinaryPath {
        BinaryPath::new(s.len() as u32, u64::from_str_radix(s, 2).unwrap_or(0))
    }

    #[test]
    fn path_ordering_and_display() {
        let mut paths = [path("10"), path("1"), path("01"), BinaryPath::ROOT, path("0")];
        paths.sort();
        let shown: Vec<String> = paths.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["-", "0", "1", "01", "10"]);
        assert_eq!(path("011").complement(), path("100"));
        assert_eq!(path("011").first_bit(), Some(false));
        assert_eq!(path("1").child(false), path("10"));
    }

    #[test]
    fn worked_example_tower() {
        let tower = tower_of(&p(&[5, 4, 2, 2, 1, 1]));
        let entries: Vec<_> = tower.entries().collect();
        assert_eq!(
            entries,
            vec![
                (BinaryPath::ROOT, 1),
                (path("1"), 1),
                (path("01"), 1),
                (path("000"), 1)
            ]
        );
        assert_eq!(tower.row_weights(), vec![1, 1, 1, 1]);
        assert_eq!(tower.render(), "row0: -:1\nrow1: 1:1\nrow2: 01:1\nrow3: 000:1\n");
        assert_eq!(partition_of(&tower), p(&[5, 4, 2, 2, 1, 1]));
        assert_eq!(deviation(&p(&[5, 4, 2, 2, 1, 1])), 0);
    }

    #[test]
    fn trivial_towers() {
        assert_eq!(tower_of(&p(&[1])).entries().collect::<Vec<_>>(), vec![(BinaryPath::ROOT, 1)]);
        assert!(tower_of(&Partition::empty()).is_empty());
        assert_eq!(tower_of(&Partition::empty()).row_weights(), Vec::<usize>::new());
        assert_eq!(partition_of(&CoreTower::new()), Partition::empty());

        let mut t = CoreTower::new();
        t.set(BinaryPath::ROOT, 2);
        assert_eq!(partition_of(&t), p(&[2, 1]));
        assert_eq!(deviation(&p(&[1])), 0);
        assert_eq!(deviation(&p(&[2, 2])), 1);
    }

    #[test]
    fn non_staircase_entries_are_rejected() {
        let bad = CoreTower::from_partitions([(BinaryPath::ROOT, p(&[2]))]);
        assert!(matches!(bad, Err(Error::NotAStaircase { .. })));
        let good = CoreTower::from_partitions([(path("1"), p(&[2, 1]))]).unwrap();
        assert_eq!(good.get(path("1")), 2);
    }

    #[test]
    fn truncation() {
        let lambda = p(&[5, 4, 2, 2, 1, 1]);
        assert_eq!(truncated_core(&lambda, 0), Partition::empty());
        assert_eq!(truncated_core(&lambda, 1), p(&[1]));
        assert_eq!(truncated_core(&lambda, 2), p_core(&lambda, 4).unwrap());
        assert_eq!(truncated_core(&lambda, 10), lambda);
    }
}
