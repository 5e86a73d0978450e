//! The 2-core tower of a partition, its row weights and the 2-adic
//! valuation of the dimension.
//!
//! ```text
//! cargo run --example core_tower -- 5,4,2,2,1,1
//! ```

use chiral::tower::{deviation, partition_of, tower_of, truncated_core};
use chiral::Partition;

fn main() -> chiral::Result<()> {
    let lambda: Partition = match std::env::args().nth(1) {
        Some(s) => format!("[{}]", s.trim_matches(|c| c == '[' || c == ']')).parse()?,
        None => Partition::new(vec![5, 4, 2, 2, 1, 1])?,
    };
    let tower = tower_of(&lambda);
    println!("{lambda}, dimension {}", lambda.dimension());
    println!("{}", tower.render());
    println!("row weights {:?}", tower.row_weights());
    println!("v2(f) = {}", deviation(&lambda));

    let conj = lambda.conjugate();
    println!("\nconjugate {conj} mirrors the tower:");
    println!("{}", tower_of(&conj).render());
    assert_eq!(tower_of(&conj), tower.mirrored());

    for i in 1..=tower.depth().unwrap_or(0) {
        println!("2^{i}-core {}", truncated_core(&lambda, i));
    }
    assert_eq!(partition_of(&tower), lambda);
    Ok(())
}
