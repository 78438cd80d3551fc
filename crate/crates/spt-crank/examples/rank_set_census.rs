//! The central counting inequality: q(m, n), the number of partitions of n
//! whose rank-set contains m, never exceeds p(-m, n), the number with rank
//! at least -m. This example prints both censuses side by side and marks
//! the cells where they collide.
//!
//! Run with `cargo run --example rank_set_census`.

use spt_crank::partition::enumerate_partitions;
use spt_crank::stats::{p_rank_at_least, q_row};

fn main() {
    let max_n = 12u32;
    let max_m = 5u32;

    println!("q(m,n) <= p(-m,n), cells marked = where they agree\n");
    print!("{:>4}", "n\\m");
    for m in 0..=max_m {
        print!("  {m:>9}");
    }
    println!();
    for n in 1..=max_n {
        let q = q_row(n, max_m);
        print!("{n:>4}");
        for m in 0..=max_m {
            let p = p_rank_at_least(m, n);
            let mark = if q[m as usize] == p { '=' } else { ' ' };
            print!("  {:>4}/{:<3}{mark}", q[m as usize], p);
        }
        println!();
    }

    // The rank-set itself, on a few partitions of 6: m sits in the set
    // exactly when the diagram has a j x (j+1) corner at j = m + lambda_{j+1}.
    println!("\nrank-set membership for partitions of 6 (m = 0..=4):");
    for lambda in enumerate_partitions(6) {
        let hits: Vec<String> = (0..=4i64)
            .filter(|&m| lambda.rank_set_contains(m))
            .map(|m| m.to_string())
            .collect();
        println!("  {:<14} contains {{{}}}", lambda.to_string(), hits.join(", "));
    }
}
