//! The signed spt-crank statistic: S-partitions are triples
//! (pi1; pi2; pi3) with pi1 a nonempty partition into distinct parts whose
//! smallest part bounds the other two components' smallest parts; each
//! carries sign (-1)^(length(pi1) - 1) and statistic
//! length(pi2) - length(pi3). The signed counts N_S(m, n) total spt(n) and
//! split spt(5n+4) and spt(7n+5) into equal residue classes.
//!
//! Run with `cargo run --example spt_crank_distribution`.

use spt_crank::spt::{enumerate_s_partitions, n_s_mod, n_s_row, spt};

fn main() {
    // All S-partitions of 3, with signs and statistics.
    println!("S-partitions of 3:");
    for s in enumerate_s_partitions(3) {
        println!(
            "  {s}  sign {:+}  spt-crank {:+}",
            s.sign(),
            s.spt_crank()
        );
    }
    println!("  spt(3) = {} (signed total)", spt(3));
    println!();

    // The signed distribution is symmetric, unimodal on m >= 0, and
    // nonnegative everywhere -- that positivity is the whole point.
    for n in [4, 9] {
        let row = n_s_row(n);
        println!("N_S(m, {n}) for m >= 0 (symmetric):");
        for (&m, &count) in row.iter().filter(|(&m, _)| m >= 0) {
            println!("  m = {m}: {count}");
        }
        println!("  total spt({n}) = {}", spt(n));
        println!();
    }

    // Congruences realized as equidistribution: the five (resp. seven)
    // residue classes of the spt-crank each hold exactly one fifth
    // (resp. seventh) of spt(n).
    for (t, n) in [(5u32, 9u32), (5, 14), (7, 5), (7, 12)] {
        let classes: Vec<i64> = (0..i64::from(t)).map(|k| n_s_mod(k, t, n)).collect();
        println!(
            "spt({n}) = {} splits mod {t} as {classes:?}",
            spt(n)
        );
    }
}
