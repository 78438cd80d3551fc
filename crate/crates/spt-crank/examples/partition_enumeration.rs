//! The enumeration core: iterate all partitions of n in descending
//! lexicographic order, count them against the pentagonal-number
//! recurrence, and read off per-partition statistics.
//!
//! Run with `cargo run --example partition_enumeration`.

use spt_crank::partition::{count_partitions, enumerate_partitions};

fn main() {
    println!("partitions of 5 with their statistics:");
    println!(
        "  {:<12} {:>5} {:>6} {:>10}",
        "partition", "rank", "crank", "conjugate"
    );
    for lambda in enumerate_partitions(5) {
        println!(
            "  {:<12} {:>5} {:>6} {:>10}",
            lambda.to_string(),
            lambda.rank().unwrap(),
            lambda.crank().unwrap(),
            lambda.conjugate().to_string()
        );
    }

    // The iterator never materializes the full list; counting streams.
    println!("\npartition counts (recurrence, cross-checked by enumeration):");
    for n in [10u32, 20, 30, 40, 50] {
        let counted = count_partitions(n).unwrap();
        println!("  p({n}) = {counted}");
    }
    let streamed = enumerate_partitions(30).count() as u64;
    assert_eq!(streamed, count_partitions(30).unwrap());
    println!("\nenumerate_partitions(30) yielded {streamed} partitions, matching p(30)");
}
