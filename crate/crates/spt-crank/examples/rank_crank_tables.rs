//! Build the full rank and crank distributions for a handful of weights
//! and show the structure the library exposes: symmetry about zero,
//! matching totals, and the adjusted crank column at n = 1.
//!
//! Run with `cargo run --example rank_crank_tables`.

use spt_crank::partition::count_partitions;
use spt_crank::stats::{CrankConvention, RankCrankTable};

fn main() {
    for n in [1, 4, 6, 9] {
        let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
        let p_n = count_partitions(n).unwrap();
        println!("n = {n}   p(n) = {p_n}");
        println!("  {:>4}  {:>8}  {:>8}", "m", "N(m,n)", "M(m,n)");
        for m in -(i64::from(n))..=i64::from(n) {
            let rank = table.rank_count(m);
            let crank = table.crank_count(m);
            if rank != 0 || crank != 0 {
                println!("  {m:>4}  {rank:>8}  {crank:>8}");
            }
        }
        let rank_total: i64 = table.rank_counts().values().sum();
        let crank_total: i64 = table.crank_counts().values().sum();
        println!("  totals: rank {rank_total}, crank {crank_total} (both p(n))");
        println!();
    }

    // The n = 1 crank column is the adjusted table: M(0,1) = -1 and
    // M(1,1) = M(-1,1) = 1, which keeps every cumulative identity uniform.
    let adjusted = RankCrankTable::build(1, CrankConvention::AdjustedAtOne);
    let raw = RankCrankTable::build(1, CrankConvention::Raw);
    println!(
        "crank at n = 1: adjusted M(0,1) = {}, raw M(0,1) = {}",
        adjusted.crank_count(0),
        raw.crank_count(0)
    );
}
