//! Integer partitions and their arithmetic.

mod abacus;
mod count;
mod dimension;
mod frobenius;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use abacus::{from_core_and_quotient, p_core, p_quotient};
pub(crate) use abacus::assemble as abacus_assemble;
pub use count::{partition_count, partition_counts, Partitions};
pub use frobenius::FrobeniusCoords;

/// A weakly decreasing sequence of positive integers.
///
/// Text form is `[5,4,2,2,1,1]`; the empty partition is `[]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last() == Some(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds from weakly decreasing parts, dropping trailing zeros.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The hook `h(a, b) = (a + 1, 1^b)`.
    pub fn hook(arm: usize, leg: usize) -> Self {
        let mut parts = vec![arm + 1];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition { parts }
    }

    /// The staircase `(m, m - 1, …, 1)`, which is the general shape of a 2-core.
    pub fn staircase(m: usize) -> Self {
        Partition {
            parts: (1..=m).rev().collect(),
        }
    }

    /// `Some(m)` when this partition is the staircase `(m, …, 1)`.
    pub fn staircase_index(&self) -> Option<usize> {
        let m = self.parts.len();
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p == m - i)
            .then_some(m)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut columns = Vec::with_capacity(width);
        let mut rows = self.parts.len();
        for j in 1..=width {
            while rows > 0 && self.parts[rows - 1] < j {
                rows -= 1;
            }
            columns.push(rows);
        }
        Partition { parts: columns }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Sum of the contents `j - i` over all cells `(i, j)`.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                let (i, len) = (i as i64, len as i64);
                // columns 0..len in row i contribute sum(j) - len * i
                len * (len - 1) / 2 - len * i
            })
            .sum()
    }

    /// Hook lengths row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len).map(|j| len - j + conj.parts[j] - i - 1).collect())
            .collect()
    }

    /// Partitions obtained by removing one corner cell.
    pub fn predecessors(&self) -> Vec<Partition> {
        (0..self.parts.len())
            .filter(|&i| i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1])
            .map(|i| {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                Partition::from_decreasing(parts)
            })
            .collect()
    }

    /// Partitions obtained by adding one cell.
    pub fn successors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let current = self.parts.get(i).copied().unwrap_or(0);
            if i == 0 || self.parts[i - 1] > current {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Number of standard Young tableaux, via the hook-length formula.
    pub fn dimension(&self) -> num_bigint::BigUint {
        dimension::hook_length_dimension(self)
    }

    pub fn frobenius(&self) -> Result<FrobeniusCoords> {
        FrobeniusCoords::of(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Parses a bracketed, comma-separated list of integers such as `[3, 1]`.
pub(crate) fn parse_list(input: &str) -> Result<Vec<usize>> {
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let inner = input
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err("expected a bracketed list"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|e| err(&e.to_string())))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s)?;
        Partition::new(parts).map_err(|e| Error::Parse {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl AsRef<[usize]> for Partition {
    fn as_ref(&self) -> &[usize] {
        &self.parts
    }
}

#[cfg(test)]
pub(crate) fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[5, 4, 2, 2, 1, 1]).conjugate(), p(&[6, 4, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn content_sums() {
        assert_eq!(p(&[2, 1]).content_sum(), 0);
        for n in 1..20usize {
            assert_eq!(p(&[n]).content_sum(), (n * (n - 1) / 2) as i64);
        }
        assert_eq!(p(&[5, 4, 2, 2, 1, 1]).content_sum(), -5);
    }

    #[test]
    fn content_sum_by_cells() {
        for n in 0..12 {
            for lambda in Partitions::new(n) {
                let direct: i64 = lambda
                    .parts()
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &len)| (0..len).map(move |j| j as i64 - i as i64))
                    .sum();
                assert_eq!(lambda.content_sum(), direct);
            }
        }
    }

    #[test]
    fn hook_lengths_of_small_shape() {
        assert_eq!(p(&[3, 1]).hook_lengths(), vec![vec![4, 2, 1], vec![1]]);
    }

    #[test]
    fn staircases() {
        assert_eq!(Partition::staircase(3), p(&[3, 2, 1]));
        assert_eq!(p(&[3, 2, 1]).staircase_index(), Some(3));
        assert_eq!(Partition::empty().staircase_index(), Some(0));
        assert_eq!(p(&[2, 2]).staircase_index(), None);
    }

    #[test]
    fn parse_and_display() {
        let lambda: Partition = "[5, 4,2,2,1,1]".parse().unwrap();
        assert_eq!(lambda.to_string(), "[5,4,2,2,1,1]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn neighbours_in_youngs_lattice() {
        assert_eq!(p(&[2, 1]).predecessors(), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(
            p(&[2, 1]).successors(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
    }
}
