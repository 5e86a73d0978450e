//! Chirality of the permutation representations on set partitions.
//!
//! ```text
//! cargo run --example permutation_reps -- 12
//! ```

use chiral::perm::{count_perm_chiral, count_perm_odd_dimension, is_neat, perm_is_chiral};
use chiral::Partitions;

fn main() -> chiral::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(10, |s| s.parse().expect("n"));
    for lambda in Partitions::new(n).filter(perm_is_chiral) {
        println!("{lambda}");
    }
    let neat = Partitions::new(n).filter(is_neat).count();
    println!("c({n}) = {}", count_perm_chiral(n as u64)?);
    println!("odd-dimensional: {} ({neat} by listing)", count_perm_odd_dimension(n as u64));
    Ok(())
}
