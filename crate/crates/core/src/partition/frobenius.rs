use std::fmt;
use std::str::FromStr;

use super::{parse_list, Partition};
use crate::error::{Error, Result};

/// Arm and leg lengths of the diagonal cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidFrobenius(format!(
                "{} arms but {} legs",
                arms.len(),
                legs.len()
            )));
        }
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidFrobenius(
                "arms and legs must be strictly decreasing".into(),
            ));
        }
        Ok(FrobeniusCoords { arms, legs })
    }

    pub fn of(lambda: &Partition) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let conj = lambda.conjugate();
        let rank = lambda
            .parts()
            .iter()
            .enumerate()
            .take_while(|&(i, &len)| len > i)
            .count();
        let arms = (0..rank).map(|i| lambda.parts()[i] - i - 1).collect();
        let legs = (0..rank).map(|i| conj.parts()[i] - i - 1).collect();
        Ok(FrobeniusCoords { arms, legs })
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Durfee square side.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn size(&self) -> usize {
        self.arms.iter().sum::<usize>() + self.legs.iter().sum::<usize>() + self.rank()
    }

    pub fn to_partition(&self) -> Partition {
        let d = self.rank();
        let mut parts: Vec<usize> = (0..d).map(|i| self.arms[i] + i + 1).collect();
        // column j (j < d) has length legs[j] + j + 1; rows below the Durfee
        // square count the columns reaching them
        let deepest = self.legs.first().map_or(0, |&b| b + 1);
        for row in d..deepest {
            let len = (0..d).filter(|&j| self.legs[j] + j >= row).count();
            parts.push(len);
        }
        Partition::from_decreasing(parts)
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "([{}],[{}])", list(&self.arms), list(&self.legs))
    }
}

impl FromStr for FrobeniusCoords {
    type Err = Error;

    /// Accepts `([a_1,…,a_d],[b_1,…,b_d])`, whitespace allowed.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| err("expected a parenthesised pair of lists"))?;
        let split = inner.find(']').ok_or_else(|| err("missing ']'"))?;
        let (first, rest) = inner.split_at(split + 1);
        let second = rest
            .trim_start()
            .strip_prefix(',')
            .ok_or_else(|| err("expected ',' between the lists"))?;
        FrobeniusCoords::new(parse_list(first)?, parse_list(second)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{p, Partitions};

    #[test]
    fn single_diagonal_cell() {
        let c = p(&[2, 1]).frobenius().unwrap();
        assert_eq!((c.arms(), c.legs()), (&[1][..], &[1][..]));
        let c = p(&[1]).frobenius().unwrap();
        assert_eq!((c.arms(), c.legs()), (&[0][..], &[0][..]));
    }

    #[test]
    fn empty_is_rejected() {
        assert_eq!(Partition::empty().frobenius(), Err(Error::EmptyPartition));
    }

    #[test]
    fn roundtrip_small() {
        for n in 1..=16 {
            for lambda in Partitions::new(n) {
                let c = lambda.frobenius().unwrap();
                assert_eq!(c.size(), n);
                assert_eq!(c.to_partition(), lambda);
                assert_eq!(c.to_string().parse::<FrobeniusCoords>().unwrap(), c);
            }
        }
    }

    #[test]
    fn printed_sample_has_size_4097() {
        let c: FrobeniusCoords = "([1879, 272, 152, 27, 20, 19, 8, 2, 0],\n [1015, 239, 168, 103, 100, 43, 32, 7, 2])"
            .parse()
            .unwrap();
        let lambda = c.to_partition();
        assert_eq!(lambda.size(), 4097);
        assert_eq!(lambda.frobenius().unwrap(), c);
    }

    #[test]
    fn invalid_coordinates() {
        assert!(FrobeniusCoords::new(vec![1, 2], vec![1, 0]).is_err());
        assert!(FrobeniusCoords::new(vec![1], vec![]).is_err());
        assert!("[1],[1]".parse::<FrobeniusCoords>().is_err());
    }
}
