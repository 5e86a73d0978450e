//! Cores and quotients on the abacus.
//!
//! ```text
//! cargo run --example abacus -- 5,4,2,2,1,1 2
//! ```

use chiral::partition::{from_core_and_quotient, p_core, p_quotient};
use chiral::Partition;

fn main() -> chiral::Result<()> {
    let mut args = std::env::args().skip(1);
    let lambda: Partition = match args.next() {
        Some(s) if s.starts_with('[') => s.parse()?,
        Some(s) => format!("[{s}]").parse()?,
        None => Partition::new(vec![5, 4, 2, 2, 1, 1])?,
    };
    let p: usize = args.next().map_or(2, |s| s.parse().expect("modulus"));

    let core = p_core(&lambda, p)?;
    let quotient = p_quotient(&lambda, p)?;
    println!("lambda     {lambda}  (n = {})", lambda.size());
    println!("{p}-core     {core}");
    for (i, q) in quotient.iter().enumerate() {
        println!("quotient {i} {q}");
    }
    let weight: usize = quotient.iter().map(Partition::size).sum();
    println!("{} = {} + {p} * {weight}", lambda.size(), core.size());

    let back = from_core_and_quotient(&core, &quotient, p)?;
    assert_eq!(back, lambda);
    println!("rebuilt    {back}");
    Ok(())
}
