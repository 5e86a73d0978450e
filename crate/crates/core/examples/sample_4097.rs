//! Uniform random chiral partitions of a large n.
//!
//! ```text
//! cargo run --release --example sample_4097 -- 4097 7
//! ```

use std::time::Instant;

use chiral::chirality::{count_chiral, is_chiral, sample_chiral_seeded};
use chiral::partition::partition_count;

fn main() -> chiral::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(4097, |s| s.parse().expect("n"));
    let seed: u64 = args.next().map_or(7, |s| s.parse().expect("seed"));

    let b = count_chiral(n);
    let p = partition_count(n as usize);
    println!("b({n}) = {b}");
    println!("p({n}) = {p}");

    let start = Instant::now();
    let lambda = sample_chiral_seeded(n, None, seed)?;
    let took = start.elapsed();
    println!("sample (seed {seed}, {took:?}): {}", lambda.frobenius()?);
    println!("chiral: {}", is_chiral(&lambda));

    let v = chiral::tower::deviation(&lambda);
    let again = sample_chiral_seeded(n, Some(v), seed + 1)?;
    println!("another with v2(f) = {v}: {}", again.frobenius()?);
    Ok(())
}
