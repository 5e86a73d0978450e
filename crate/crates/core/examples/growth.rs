//! a(n) against b(n+2), the data behind the growth plot.
//!
//! ```text
//! cargo run --example growth -- 64
//! ```

use chiral::chirality::{count_chiral, count_odd, ratio_inequality_holds};
use num_traits::ToPrimitive;

fn main() {
    let n_max: u64 = std::env::args().nth(1).map_or(32, |s| s.parse().expect("n"));
    println!("{:>4} {:>12} {:>12} {:>8}", "n", "a(n)", "b(n+2)", "ratio");
    for n in 1..=n_max {
        let a = count_odd(n);
        let b = count_chiral(n + 2);
        let ratio = a.to_f64().unwrap_or(f64::NAN) / b.to_f64().unwrap_or(f64::NAN);
        let report = ratio_inequality_holds(n);
        assert!(report.consistent(n));
        let mark = if report.equality { "=" } else { "" };
        println!("{n:>4} {a:>12} {b:>12} {ratio:>8.4} {mark}");
    }
}
