//! Walk the combinatorial injection that proves q(m, n) <= p(-m, n): each
//! rank-set witness symbol falls into one of six source classes (five at
//! m = 0, with finer splitting), and a class-specific map carries it into
//! a disjoint target class, reversibly.
//!
//! Run with `cargo run --example injection_walkthrough`.

use spt_crank::classify::{classify_q, q_symbols};
use spt_crank::durfee::DurfeeSymbol;
use spt_crank::inject::{apply_inverse, phi, phi4};
use spt_crank::partition::Partition;

fn main() {
    // Every symbol of the cell (m, n) = (1, 9), grouped by class.
    let (m, n) = (1u32, 9u32);
    println!("all rank-set witnesses at m = {m}, n = {n}:\n");
    for symbol in q_symbols(m, n) {
        let class = classify_q(&symbol).unwrap();
        let trace = phi(&symbol).unwrap();
        let aux = match (trace.k, trace.h) {
            (Some(k), Some(h)) => format!("  (k={k}, h={h})"),
            (Some(k), None) => format!("  (k={k})"),
            _ => String::new(),
        };
        println!(
            "  {:<22} {class} -> {} {}{aux}",
            symbol.to_string(),
            trace.target_class,
            trace.output
        );
        // Each map undoes exactly.
        assert_eq!(apply_inverse(trace.map, &trace.output).unwrap(), symbol);
    }

    // A worked single map: the row-trading transformation on a symbol of
    // weight 41, which moves the k = 2 largest alpha-rows across the
    // rectangle boundary.
    println!("\nrow-trading map on a weight-41 symbol:");
    let input = DurfeeSymbol::new(
        2,
        3,
        Partition::new(vec![5, 4, 2, 1]).unwrap(),
        Partition::new(vec![3, 3, 2, 2, 2, 2]).unwrap(),
    )
    .unwrap();
    let trace = phi4(&input).unwrap();
    println!("  {trace}");
    let back = apply_inverse(trace.map, &trace.output).unwrap();
    println!("  inverse recovers {back}");
}
