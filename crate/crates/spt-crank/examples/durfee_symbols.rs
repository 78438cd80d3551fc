//! Decompose partitions into m-Durfee rectangle symbols: the largest
//! (m+j) x j rectangle in the Ferrers diagram, the conjugated columns to
//! its right (top row alpha), and the rows below it (bottom row beta).
//!
//! Run with `cargo run --example durfee_symbols`.

use spt_crank::durfee::{durfee_index, to_symbol};
use spt_crank::partition::Partition;

fn main() {
    let lambda = Partition::new(vec![7, 7, 6, 4, 3, 3, 2, 2, 2]).unwrap();
    println!("partition {lambda}, weight {}", lambda.weight());
    for m in 0..=3 {
        let symbol = to_symbol(&lambda, m);
        println!(
            "  m = {m}: rectangle width j = {}, symbol {symbol}",
            symbol.j()
        );
        assert_eq!(symbol.to_partition(), lambda); // lossless
    }
    println!();

    // When the partition has fewer than m + 1 rows, no positive-width
    // rectangle fits: j = 0 and the whole diagram conjugates into alpha.
    let short = Partition::new(vec![5, 5, 1]).unwrap();
    let symbol = to_symbol(&short, 3);
    println!("partition {short} at m = 3: {symbol}");
    println!(
        "  weight check: rectangle {} + alpha {} + beta {} = {}",
        (symbol.m() + symbol.j()) * symbol.j(),
        symbol.alpha().weight(),
        symbol.beta().weight(),
        symbol.weight()
    );
    println!();

    // The symbol of the empty partition is empty at every offset.
    let empty = to_symbol(&Partition::empty(), 2);
    println!("empty partition at m = 2: {empty}");

    // Maximality of the rectangle, row by row.
    let lambda = Partition::new(vec![6, 5, 5, 3, 1]).unwrap();
    for m in 0..=2 {
        println!(
            "durfee_index({lambda}, {m}) = {}",
            durfee_index(&lambda, m)
        );
    }
}
