//! Chiral partition counts, split by 2-adic valuation of the dimension.
//!
//! ```text
//! cargo run --example counts -- 40
//! ```

use chiral::binary::BinaryDecomposition;
use chiral::chirality::{count_chiral, count_chiral_by_valuation, count_odd};
use chiral::partition::partition_counts;

fn main() {
    let n_max: usize = std::env::args().nth(1).map_or(30, |s| s.parse().expect("n"));
    let p = partition_counts(n_max);
    println!("{:>4} {:>10} {:>8} {:>8}  b_v(n) for v = 0, 1, ...", "n", "p(n)", "b(n)", "a(n)");
    for n in 1..=n_max as u64 {
        let top = BinaryDecomposition::of(n).k1().unwrap_or(0);
        let by_v: Vec<String> = (0..=top)
            .map(|v| count_chiral_by_valuation(n, v).to_string())
            .collect();
        println!(
            "{n:>4} {:>10} {:>8} {:>8}  {}",
            p[n as usize],
            count_chiral(n),
            count_odd(n),
            by_v.join(" ")
        );
    }
}
