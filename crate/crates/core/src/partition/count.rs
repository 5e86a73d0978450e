use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::Partition;

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub struct Partitions {
    // parts of the current partition, plus a flag for exhaustion
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition::from_decreasing(current.clone());

        // Find the last part greater than one, decrement it and spread the
        // remainder greedily.
        let mut parts = current;
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            let mut rest = ones + 1;
            while rest > 0 {
                let piece = rest.min(cap);
                parts.push(piece);
                rest -= piece;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}

/// `p(0), …, p(n_max)` by Euler's pentagonal-number recurrence.
pub fn partition_counts(n_max: usize) -> Vec<BigUint> {
    let mut table: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    table.push(BigInt::from(1));
    for n in 1..=n_max {
        let mut total = BigInt::zero();
        for k in 1.. {
            let first = k * (3 * k - 1) / 2;
            if first > n {
                break;
            }
            let positive = k % 2 == 1;
            let mut term = table[n - first].clone();
            let second = first + k;
            if second <= n {
                term += &table[n - second];
            }
            if positive {
                total += term;
            } else {
                total -= term;
            }
        }
        table.push(total);
    }
    table
        .into_iter()
        .map(|v| v.to_biguint().expect("partition counts are non-negative"))
        .collect()
}

/// Exact number of partitions of `n`.
pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().expect("table is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterator_counts_match_recurrence() {
        let table = partition_counts(30);
        for n in 0..=30 {
            let listed: Vec<_> = Partitions::new(n).collect();
            assert_eq!(BigUint::from(listed.len()), table[n], "n = {n}");
            assert!(listed.iter().all(|l| l.size() == n));
            let mut sorted = listed.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), listed.len());
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(partition_count(0), BigUint::from(1u32));
        assert_eq!(partition_count(5), BigUint::from(7u32));
        assert_eq!(partition_count(100), "190569292".parse().unwrap());
    }
}
