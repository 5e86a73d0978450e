//! Lists every chiral partition of n in canonical order, with its tower case.
//!
//! ```text
//! cargo run --example enumerate -- 17
//! ```

use chiral::chirality::{chiral_configs, is_chiral};

fn main() {
    let n: u64 = std::env::args().nth(1).map_or(9, |s| s.parse().expect("n"));
    let mut total = 0;
    for config in chiral_configs(n, None) {
        let lambda = config.partition();
        assert!(is_chiral(&lambda));
        println!("{:<24} {}", lambda.to_string(), config.case());
        total += 1;
    }
    println!("{total} chiral partitions of {n}");
}
