//! Signed partition triples and the spt-crank distribution.
//!
//! An *S-partition* of `n` is a triple `(π1, π2, π3)` of partitions whose
//! weights sum to `n`, where
//!
//! * `π1` is nonempty and has distinct parts, and
//! * the smallest part of `π1` is at most the smallest part of `π2` and of
//!   `π3` (an empty component counts as having smallest part `+∞`).
//!
//! Each triple carries a sign `(-1)^(ℓ(π1) - 1)` (`ℓ` counts parts) and the
//! **spt-crank** `ℓ(π2) - ℓ(π3)`.  Writing `N_S(m, n)` for the number of
//! S-partitions of `n` with spt-crank `m`, counted with sign, the triples
//! refine the smallest-parts function `spt(n)` (the total number of smallest
//! parts over all partitions of `n`):
//!
//! * `Σ_m N_S(m, n) = spt(n)`,
//! * `N_S(m, n) = N_S(-m, n)`,
//! * grouping by residue, `Σ_{m ≡ k (mod 5)} N_S(m, 5n+4) = spt(5n+4)/5` and
//!   `Σ_{m ≡ k (mod 7)} N_S(m, 7n+5) = spt(7n+5)/7` for every residue `k`,
//!   which explains the congruences `spt(5n+4) ≡ 0 (mod 5)` and
//!   `spt(7n+5) ≡ 0 (mod 7)`.
//!
//! Enumeration is exhaustive, so the cost grows with the number of triples
//! rather than with `p(n)`.  Full rows of `N_S(·, n)` are practical up to
//! roughly `n = 26`; `spt(n)` itself only walks ordinary partitions and
//! remains cheap far beyond that.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::partition::{visit_partitions, Part, Partition, SmallestPart};

/// Ways a triple of partitions can fail to be an S-partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SptError {
    /// The first component was empty; it must contain at least one part.
    #[error("first component of an S-partition must be nonempty")]
    EmptyFirstComponent,
    /// The first component repeated a part; its parts must be distinct.
    #[error("first component must have distinct parts, found {part} twice")]
    RepeatedPart {
        /// The repeated part value.
        part: Part,
    },
    /// The first component's smallest part exceeded another component's.
    #[error(
        "smallest part {pi1_min} of the first component exceeds the smallest \
         part of a later component ({pi2_min}, {pi3_min})"
    )]
    MinimalityViolation {
        /// Smallest part of the first component.
        pi1_min: SmallestPart,
        /// Smallest part of the second component.
        pi2_min: SmallestPart,
        /// Smallest part of the third component.
        pi3_min: SmallestPart,
    },
}

/// A signed triple of partitions `(π1, π2, π3)` carrying the spt-crank.
///
/// Invariants enforced by [`SPartition::new`]:
///
/// * `π1` is nonempty and strictly decreasing (distinct parts);
/// * `s(π1) ≤ min(s(π2), s(π3))` where `s` is the smallest part and empty
///   partitions count as `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SPartition {
    pi1: Partition,
    pi2: Partition,
    pi3: Partition,
}

impl SPartition {
    /// Builds an S-partition, checking both invariants.
    ///
    /// # Errors
    ///
    /// Returns an [`SptError`] if `pi1` is empty or has a repeated part, or
    /// if its smallest part exceeds the smallest part of `pi2` or `pi3`.
    pub fn new(pi1: Partition, pi2: Partition, pi3: Partition) -> Result<Self, SptError> {
        Self::validate(&pi1, &pi2, &pi3)?;
        Ok(Self { pi1, pi2, pi3 })
    }

    /// Builds an S-partition that is already known to satisfy the invariants.
    pub(crate) fn from_parts_unchecked(pi1: Partition, pi2: Partition, pi3: Partition) -> Self {
        debug_assert!(Self::validate(&pi1, &pi2, &pi3).is_ok());
        Self { pi1, pi2, pi3 }
    }

    fn validate(pi1: &Partition, pi2: &Partition, pi3: &Partition) -> Result<(), SptError> {
        if pi1.is_empty() {
            return Err(SptError::EmptyFirstComponent);
        }
        for pair in pi1.parts().windows(2) {
            if pair[0] == pair[1] {
                return Err(SptError::RepeatedPart { part: pair[0] });
            }
        }
        let s1 = pi1.smallest_part();
        if s1 > pi2.smallest_part() || s1 > pi3.smallest_part() {
            return Err(SptError::MinimalityViolation {
                pi1_min: s1,
                pi2_min: pi2.smallest_part(),
                pi3_min: pi3.smallest_part(),
            });
        }
        Ok(())
    }

    /// The first component (nonempty, distinct parts).
    pub fn pi1(&self) -> &Partition {
        &self.pi1
    }

    /// The second component (all parts at least `s(π1)`).
    pub fn pi2(&self) -> &Partition {
        &self.pi2
    }

    /// The third component (all parts at least `s(π1)`).
    pub fn pi3(&self) -> &Partition {
        &self.pi3
    }

    /// Total weight `|π1| + |π2| + |π3|`.
    pub fn weight(&self) -> u64 {
        self.pi1.weight() + self.pi2.weight() + self.pi3.weight()
    }

    /// The sign `(-1)^(ℓ(π1) - 1)`: `+1` when `π1` has an odd number of
    /// parts, `-1` otherwise.
    pub fn sign(&self) -> i64 {
        if self.pi1.num_parts() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// The spt-crank `ℓ(π2) - ℓ(π3)`.
    pub fn spt_crank(&self) -> i64 {
        self.pi2.num_parts() as i64 - self.pi3.num_parts() as i64
    }
}

impl fmt::Display for SPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.pi1, self.pi2, self.pi3)
    }
}

/// The smallest-parts function: total multiplicity of the smallest part over
/// all partitions of `n`, e.g. `spt(4) = 10`.  `spt(0) = 0` since the empty
/// partition has no parts.
pub fn spt(n: u32) -> u64 {
    let mut total = 0u64;
    visit_partitions(n, |parts| {
        if let Some(&smallest) = parts.last() {
            // Parts are sorted in weakly decreasing order, so the smallest
            // part's multiplicity is the length of the trailing run.
            let mult = parts.iter().rev().take_while(|&&p| p == smallest).count();
            total += mult as u64;
        }
    });
    total
}

/// Distinct-part partitions of `w` whose smallest part is exactly `s`,
/// in lexicographically decreasing order of their part lists.
fn distinct_partitions_with_min(w: u32, s: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if s == 0 || w < s {
        return out;
    }
    // Grow part lists upward from the forced smallest part `s`, then flip
    // each into decreasing order.
    let mut acc = vec![s];
    grow_distinct(w - s, s, &mut acc, &mut out);
    out.sort_by(|a, b| b.parts().cmp(a.parts()));
    out
}

fn grow_distinct(remaining: u32, prev: u32, acc: &mut Vec<Part>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let mut parts = acc.clone();
        parts.reverse();
        out.push(Partition::from_sorted_unchecked(parts));
        return;
    }
    let mut next = prev + 1;
    while next <= remaining {
        acc.push(next);
        grow_distinct(remaining - next, next, acc, out);
        acc.pop();
        next += 1;
    }
}

/// Partitions of `w` with every part at least `s`, in lexicographically
/// decreasing order of their part lists (`w = 0` yields only `∅`).
fn partitions_with_parts_at_least(w: u32, s: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    grow_bounded(w, w, s, &mut acc, &mut out);
    out
}

fn grow_bounded(remaining: u32, max_part: u32, s: u32, acc: &mut Vec<Part>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted_unchecked(acc.clone()));
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= s {
        acc.push(part);
        grow_bounded(remaining - part, part, s, acc, out);
        acc.pop();
        part -= 1;
    }
}

/// Walks every S-partition of `n` exactly once without materializing the
/// triples, passing borrowed components to `f`.
fn visit_component_triples<F: FnMut(&Partition, &Partition, &Partition)>(n: u32, mut f: F) {
    for s in 1..=n {
        // Partitions with parts ≥ s, cached per weight 0..=n-s; both π2 and
        // π3 draw from these lists.
        let cap = n - s;
        let pool: Vec<Vec<Partition>> = (0..=cap)
            .map(|w| partitions_with_parts_at_least(w, s))
            .collect();
        for w1 in s..=n {
            let rest = n - w1;
            for pi1 in &distinct_partitions_with_min(w1, s) {
                for w2 in 0..=rest {
                    let w3 = rest - w2;
                    for pi2 in &pool[w2 as usize] {
                        for pi3 in &pool[w3 as usize] {
                            f(pi1, pi2, pi3);
                        }
                    }
                }
            }
        }
    }
}

/// Visits every S-partition of `n` exactly once in a fixed canonical order:
/// the smallest part `s` of `π1` ascending; then the weight of `π1`
/// ascending, with ties in lexicographically decreasing part order; then the
/// weight of `π2` ascending; then `π2` and finally `π3`, each
/// lexicographically decreasing.  `n = 0` visits nothing.
pub fn visit_s_partitions<F: FnMut(&SPartition)>(n: u32, mut f: F) {
    visit_component_triples(n, |pi1, pi2, pi3| {
        let sp = SPartition::from_parts_unchecked(pi1.clone(), pi2.clone(), pi3.clone());
        f(&sp);
    });
}

/// Collects every S-partition of `n` in the order of
/// [`visit_s_partitions`].  Intended for small `n`; the number of triples
/// grows quickly (use the visitor or [`n_s_row`] for aggregates).
pub fn enumerate_s_partitions(n: u32) -> Vec<SPartition> {
    let mut out = Vec::new();
    visit_s_partitions(n, |sp| out.push(sp.clone()));
    out
}

/// The full signed spt-crank row for weight `n`: maps each spt-crank value
/// `m` to `N_S(m, n)`.  Values that cancel to zero are omitted, so absent
/// keys mean zero.  Computed in one pass over all S-partitions of `n`.
pub fn n_s_row(n: u32) -> BTreeMap<i64, i64> {
    let mut row = BTreeMap::new();
    visit_component_triples(n, |pi1, pi2, pi3| {
        let sign = if pi1.num_parts() % 2 == 1 { 1 } else { -1 };
        let crank = pi2.num_parts() as i64 - pi3.num_parts() as i64;
        *row.entry(crank).or_insert(0i64) += sign;
    });
    row.retain(|_, v| *v != 0);
    row
}

/// The signed count `N_S(m, n)` of S-partitions of `n` with spt-crank `m`.
///
/// Enumerates all of weight `n`; when several values of `m` are needed for
/// the same `n`, compute [`n_s_row`] once instead.
pub fn n_s(m: i64, n: u32) -> i64 {
    n_s_row(n).get(&m).copied().unwrap_or(0)
}

/// The residue aggregate `N_S(k, t, n) = Σ_{m ≡ k (mod t)} N_S(m, n)`.
///
/// `k` is reduced modulo `t`, so any representative of the residue class may
/// be passed.
///
/// # Panics
///
/// Panics if `t == 0`.
pub fn n_s_mod(k: i64, t: u32, n: u32) -> i64 {
    assert!(t >= 1, "modulus must be positive");
    let t = i64::from(t);
    let k = k.rem_euclid(t);
    n_s_row(n)
        .iter()
        .filter(|(m, _)| m.rem_euclid(t) == k)
        .map(|(_, count)| count)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use std::collections::BTreeSet;

    fn part(parts: &[Part]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation_rejects_bad_triples() {
        // Empty first component.
        assert_eq!(
            SPartition::new(Partition::empty(), Partition::empty(), Partition::empty()),
            Err(SptError::EmptyFirstComponent)
        );
        // Repeated part in the first component.
        assert_eq!(
            SPartition::new(part(&[3, 3, 1]), Partition::empty(), Partition::empty()),
            Err(SptError::RepeatedPart { part: 3 })
        );
        // Smallest part of π1 larger than a later component's smallest part.
        assert_eq!(
            SPartition::new(part(&[3, 2]), part(&[1]), Partition::empty()),
            Err(SptError::MinimalityViolation {
                pi1_min: SmallestPart::Finite(2),
                pi2_min: SmallestPart::Finite(1),
                pi3_min: SmallestPart::Infinite,
            })
        );
        // A valid triple, with accessors.
        let sp = SPartition::new(part(&[3, 1]), part(&[2, 1]), part(&[1, 1, 1])).unwrap();
        assert_eq!(sp.weight(), 10);
        assert_eq!(sp.sign(), -1); // two parts in π1
        assert_eq!(sp.spt_crank(), -1); // 2 - 3
        assert_eq!(sp.to_string(), "((3,1); (2,1); (1,1,1))");
    }

    #[test]
    fn weight_one_has_unique_triple() {
        let all = enumerate_s_partitions(1);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_string(), "((1); ∅; ∅)");
        assert_eq!(all[0].sign(), 1);
        assert_eq!(all[0].spt_crank(), 0);
    }

    #[test]
    fn weight_two_has_three_triples() {
        let all: BTreeSet<String> = enumerate_s_partitions(2)
            .iter()
            .map(|sp| sp.to_string())
            .collect();
        let expected: BTreeSet<String> = ["((2); ∅; ∅)", "((1); (1); ∅)", "((1); ∅; (1))"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn spt_small_values() {
        assert_eq!(spt(0), 0);
        assert_eq!(spt(1), 1);
        assert_eq!(spt(2), 3);
        assert_eq!(spt(3), 5);
        assert_eq!(spt(4), 10);
        assert_eq!(spt(5), 14);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Independent oracle: filter all triples of ordinary partitions
        // through the public validator.
        for n in 1..=12u32 {
            let structured: Vec<String> = enumerate_s_partitions(n)
                .iter()
                .map(|sp| sp.to_string())
                .collect();
            let unique: BTreeSet<&String> = structured.iter().collect();
            assert_eq!(unique.len(), structured.len(), "duplicate triple at n = {n}");

            let mut brute = Vec::new();
            for w1 in 0..=n {
                for p1 in enumerate_partitions(w1) {
                    for w2 in 0..=(n - w1) {
                        for p2 in enumerate_partitions(w2) {
                            for p3 in enumerate_partitions(n - w1 - w2) {
                                if let Ok(sp) = SPartition::new(p1.clone(), p2.clone(), p3) {
                                    brute.push(sp.to_string());
                                }
                            }
                        }
                    }
                }
            }
            let mut sorted = structured;
            sorted.sort();
            brute.sort();
            assert_eq!(sorted, brute, "triple sets differ at n = {n}");
        }
    }

    #[test]
    fn signed_total_equals_spt() {
        for n in 1..=20u32 {
            let total: i64 = n_s_row(n).values().sum();
            assert_eq!(total, spt(n) as i64, "n = {n}");
        }
    }

    #[test]
    fn rows_are_symmetric_and_unimodal() {
        for n in 1..=16u32 {
            let row = n_s_row(n);
            for (&m, &count) in &row {
                assert_eq!(count, row.get(&-m).copied().unwrap_or(0), "m = {m}, n = {n}");
            }
            // Nonnegative and weakly decreasing away from zero.
            let mut prev = i64::MAX;
            for m in 0..=i64::from(n) {
                let count = row.get(&m).copied().unwrap_or(0);
                assert!(count >= 0, "N_S({m}, {n}) = {count} < 0");
                assert!(count <= prev, "N_S({m}, {n}) = {count} > N_S({}, {n}) = {prev}", m - 1);
                prev = count;
            }
        }
    }

    #[test]
    fn residue_classes_split_evenly() {
        // spt(9) splits evenly into five classes, spt(12) into seven.
        let spt9 = spt(9) as i64;
        assert_eq!(spt9 % 5, 0);
        for k in 0..5 {
            assert_eq!(n_s_mod(k, 5, 9), spt9 / 5, "k = {k}");
        }
        let spt12 = spt(12) as i64;
        assert_eq!(spt12 % 7, 0);
        for k in 0..7 {
            assert_eq!(n_s_mod(k, 7, 12), spt12 / 7, "k = {k}");
        }
    }

    #[test]
    fn residue_classes_partition_the_total() {
        for n in 1..=15u32 {
            let total: i64 = n_s_row(n).values().sum();
            for t in [5u32, 7, 13] {
                let by_class: i64 = (0..i64::from(t)).map(|k| n_s_mod(k, t, n)).sum();
                assert_eq!(by_class, total, "t = {t}, n = {n}");
            }
        }
    }

    #[test]
    fn n_s_matches_row_lookup() {
        let row = n_s_row(10);
        for m in -12..=12i64 {
            assert_eq!(n_s(m, 10), row.get(&m).copied().unwrap_or(0));
        }
        // Reduction of residue representatives.
        assert_eq!(n_s_mod(-1, 5, 9), n_s_mod(4, 5, 9));
        assert_eq!(n_s_mod(12, 5, 9), n_s_mod(2, 5, 9));
    }
}
