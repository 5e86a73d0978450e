//! f and g for hooks, rows 1 to 7, with odd entries starred.

use chiral::chirality::{chiral_hook_count, g_exact};
use chiral::Partition;

fn row(cells: usize, value: impl Fn(&Partition) -> num_bigint::BigUint) -> String {
    (0..cells)
        .map(|leg| {
            let hook = Partition::hook(cells - 1 - leg, leg);
            let x = value(&hook);
            let mark = if x.bit(0) { "*" } else { " " };
            format!("{x:>3}{mark}")
        })
        .collect()
}

fn main() {
    let g = |h: &Partition| g_exact(h).unwrap_or_default();
    println!("f");
    for cells in 1..=7 {
        println!("{:>w$}{}", "", row(cells, Partition::dimension), w = 2 * (7 - cells));
    }
    println!("g");
    for cells in 1..=7 {
        println!("{:>w$}{}", "", row(cells, g), w = 2 * (7 - cells));
    }
    for cells in [7, 10, 34, 100] {
        println!("chiral hooks with {cells} cells: {}", chiral_hook_count(cells));
    }
}
