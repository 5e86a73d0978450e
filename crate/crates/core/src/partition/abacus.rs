//! p-cores and p-quotients on a p-runner abacus.
//!
//! A partition with at most `m` parts is encoded by its beta-set
//! `β_i = λ_i + (m - i)` for `i = 1..=m`. Bead `β` sits on runner `β mod p`
//! at position `β div p`. The number of beads `m` is always a multiple of
//! `p`, so that runner `k` collects exactly the rows whose hand node has
//! content `≡ k (mod p)`; this fixes the indexing of the quotient.

use super::Partition;
use crate::error::{Error, Result};

fn check_modulus(p: usize) -> Result<()> {
    if p < 2 {
        Err(Error::InvalidModulus(p))
    } else {
        Ok(())
    }
}

/// Bead positions per runner, each list in decreasing order.
fn runners(lambda: &Partition, p: usize) -> Vec<Vec<usize>> {
    let m = lambda.len().div_ceil(p) * p;
    let mut runners = vec![Vec::with_capacity(m / p); p];
    for i in 0..m {
        let part = lambda.parts().get(i).copied().unwrap_or(0);
        let beta = part + (m - 1 - i);
        runners[beta % p].push(beta / p);
    }
    runners
}

/// Reads a partition off decreasing bead positions.
fn partition_from_positions(positions: &[usize]) -> Partition {
    let c = positions.len();
    Partition::from_decreasing(
        positions
            .iter()
            .enumerate()
            .map(|(j, &q)| q - (c - 1 - j))
            .collect(),
    )
}

/// Reads a partition off a full beta-set given in decreasing order.
fn partition_from_beta(betas: &[usize]) -> Partition {
    partition_from_positions(betas)
}

/// The p-core: what remains after removing rim p-hooks until none is left.
pub fn p_core(lambda: &Partition, p: usize) -> Result<Partition> {
    check_modulus(p)?;
    let runners = runners(lambda, p);
    let mut betas: Vec<usize> = runners
        .iter()
        .enumerate()
        .flat_map(|(r, beads)| (0..beads.len()).map(move |q| q * p + r))
        .collect();
    betas.sort_unstable_by(|a, b| b.cmp(a));
    Ok(partition_from_beta(&betas))
}

/// The p-quotient `(λ_0, …, λ_{p-1})`.
pub fn p_quotient(lambda: &Partition, p: usize) -> Result<Vec<Partition>> {
    check_modulus(p)?;
    Ok(runners(lambda, p)
        .iter()
        .map(|beads| partition_from_positions(beads))
        .collect())
}

/// Rebuilds a partition from its p-core and p-quotient.
pub fn from_core_and_quotient(
    core: &Partition,
    quotient: &[Partition],
    p: usize,
) -> Result<Partition> {
    check_modulus(p)?;
    if quotient.len() != p {
        return Err(Error::QuotientArity {
            expected: p,
            got: quotient.len(),
        });
    }
    if p_core(core, p)? != *core {
        return Err(Error::NotACore {
            core: core.to_string(),
            p,
        });
    }
    Ok(assemble(core, quotient, p))
}

/// `from_core_and_quotient` without validation; `core` must be a p-core.
pub(crate) fn assemble(core: &Partition, quotient: &[Partition], p: usize) -> Partition {
    let longest = quotient.iter().map(Partition::len).max().unwrap_or(0);
    // every runner needs at least `longest` beads
    let m = (core.len().div_ceil(p) + longest) * p;
    let mut counts = vec![0usize; p];
    for i in 0..m {
        let part = core.parts().get(i).copied().unwrap_or(0);
        counts[(part + m - 1 - i) % p] += 1;
    }
    let mut betas = Vec::with_capacity(m);
    for (r, (&c, mu)) in counts.iter().zip(quotient).enumerate() {
        for j in 0..c {
            let part = mu.parts().get(j).copied().unwrap_or(0);
            betas.push((part + c - 1 - j) * p + r);
        }
    }
    betas.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_decreasing(
        betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (m - 1 - i))
            .collect(),
    )
}
