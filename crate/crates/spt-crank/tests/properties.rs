//! Randomized invariants over the public API: structural round-trips,
//! symmetries, and agreement between independent counting routes.

use proptest::prelude::*;

use spt_crank::classify::{classify_q, in_q, q_symbols};
use spt_crank::durfee::to_symbol;
use spt_crank::inject::{apply_inverse, phi};
use spt_crank::partition::{count_partitions, enumerate_partitions, Partition};
use spt_crank::spt::{n_s_row, spt, SPartition};
use spt_crank::stats::{q_count, q_row, CrankConvention, RankCrankTable};

/// Random partition from an unsorted bag of parts.
fn partition_strategy(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len)
        .prop_map(|parts| Partition::from_unsorted(parts).unwrap())
}

proptest! {
    /// Symbol extraction is lossless at every offset.
    #[test]
    fn symbol_reassembles_its_partition(
        lambda in partition_strategy(15, 12),
        m in 0u32..=6,
    ) {
        let symbol = to_symbol(&lambda, m);
        prop_assert_eq!(symbol.to_partition(), lambda.clone());
        prop_assert_eq!(symbol.weight(), lambda.weight());
        // Weight decomposes as rectangle + rows right of it + rows below.
        let rect = u64::from(symbol.m() + symbol.j()) * u64::from(symbol.j());
        prop_assert_eq!(
            symbol.weight(),
            rect + symbol.alpha().weight() + symbol.beta().weight()
        );
    }

    /// Conjugation is an involution and negates the rank.
    #[test]
    fn conjugation_involution_negates_rank(lambda in partition_strategy(15, 12)) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.conjugate(), lambda.clone());
        prop_assert_eq!(conj.weight(), lambda.weight());
        match (lambda.rank(), conj.rank()) {
            (Some(r), Some(s)) => prop_assert_eq!(r, -s),
            (None, None) => {}
            other => prop_assert!(false, "rank defined on one side only: {:?}", other),
        }
    }

    /// The rank-set counts agree along three routes: the row builder, the
    /// single-cell counter, and direct membership testing.
    #[test]
    fn rank_set_counts_agree(n in 0u32..=14, m_max in 0u32..=6) {
        let row = q_row(n, m_max);
        for m in 0..=m_max {
            prop_assert_eq!(row[m as usize], q_count(m, n));
            let direct = enumerate_partitions(n)
                .filter(|p| p.rank_set_contains(i64::from(m)))
                .count() as u64;
            prop_assert_eq!(row[m as usize], direct);
        }
    }

    /// Rank and crank tables each total p(n); the rank distribution is
    /// symmetric for every n and the crank distribution for n != 1.
    #[test]
    fn table_totals_and_symmetries(n in 0u32..=22) {
        let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
        let p_n = count_partitions(n).unwrap() as i64;
        prop_assert_eq!(table.rank_counts().values().sum::<i64>(), p_n);
        prop_assert_eq!(table.crank_counts().values().sum::<i64>(), p_n);
        for m in 1..=i64::from(n) {
            prop_assert_eq!(table.rank_count(m), table.rank_count(-m));
            if n != 1 {
                prop_assert_eq!(table.crank_count(m), table.crank_count(-m));
            }
        }
    }

    /// Triple validation accepts exactly the declared shape: nonempty
    /// distinct first component whose smallest part bounds the other two.
    #[test]
    fn s_partition_validation_matches_predicate(
        p1 in partition_strategy(8, 5),
        p2 in partition_strategy(8, 5),
        p3 in partition_strategy(8, 5),
    ) {
        let distinct = !p1.is_empty()
            && p1.parts().windows(2).all(|w| w[0] > w[1]);
        let bounded = p1
            .smallest_part()
            .le(p2.smallest_part().min(p3.smallest_part()));
        let expect = distinct && bounded;
        let got = SPartition::new(p1.clone(), p2.clone(), p3.clone());
        prop_assert_eq!(got.is_ok(), expect, "({}; {}; {})", p1, p2, p3);
        if let Ok(triple) = got {
            prop_assert_eq!(
                triple.weight(),
                p1.weight() + p2.weight() + p3.weight()
            );
            let expected_sign = if p1.num_parts() % 2 == 1 { 1 } else { -1 };
            prop_assert_eq!(triple.sign(), expected_sign);
            prop_assert_eq!(
                triple.spt_crank(),
                p2.num_parts() as i64 - p3.num_parts() as i64
            );
        }
    }
}

proptest! {
    // Cell-exhaustive checks: proptest samples the (n, m) cell, the body
    // sweeps every symbol in it. Fewer cases keep the runtime modest.
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Every rank-set witness symbol classifies, maps with its weight
    /// preserved into the routed class, and comes back under the inverse.
    #[test]
    fn classified_symbols_map_and_return(n in 0u32..=16, m in 0u32..=4) {
        let mut images = Vec::new();
        for lambda in enumerate_partitions(n) {
            let symbol = to_symbol(&lambda, m);
            prop_assert_eq!(
                in_q(&symbol),
                lambda.rank_set_contains(i64::from(m)),
                "membership mismatch for {}",
                symbol
            );
            if !in_q(&symbol) {
                prop_assert!(classify_q(&symbol).is_err());
                continue;
            }
            let class = classify_q(&symbol).unwrap();
            let trace = phi(&symbol).unwrap();
            prop_assert_eq!(trace.source_class, class);
            prop_assert_eq!(trace.output.weight(), symbol.weight());
            prop_assert_eq!(Some(trace.target_class), class.route());
            prop_assert_eq!(apply_inverse(trace.map, &trace.output).unwrap(), symbol);
            images.push(trace.output);
        }
        let total = images.len();
        images.sort();
        images.dedup();
        prop_assert_eq!(images.len(), total, "images collide at m={}, n={}", m, n);
        // And the domain sweep agrees with the dedicated generator.
        prop_assert_eq!(q_symbols(m, n).len() as u64, q_count(m, n));
    }

    /// The signed triple counts collapse to the smallest-parts total.
    #[test]
    fn signed_counts_total_spt(n in 1u32..=18) {
        let row = n_s_row(n);
        prop_assert_eq!(row.values().sum::<i64>(), spt(n) as i64);
        // Symmetric in the sign of the statistic.
        for (&m, &count) in &row {
            prop_assert_eq!(count, row.get(&-m).copied().unwrap_or(0));
        }
    }
}
