//! Self-conjugate chiral partitions exist only for n = 3 and n = 2^k + ε.

use chiral::chirality::{count_self_conjugate_chiral, enumerate_self_conjugate_chiral};

fn main() {
    for n in 1..=40u64 {
        let count = count_self_conjugate_chiral(n);
        if count == 0u32.into() {
            continue;
        }
        let listed: Vec<String> = enumerate_self_conjugate_chiral(n)
            .map(|l| l.to_string())
            .collect();
        println!("n = {n:>2}: {count}  {}", listed.join(" "));
    }
}
