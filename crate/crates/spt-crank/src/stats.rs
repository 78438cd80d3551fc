//! Partition statistics: rank, crank, rank-sets, and their counting
//! functions, distributions, and moments.
//!
//! For a non-empty partition lambda:
//!
//! - rank(lambda) = lambda_1 - l(lambda) (largest part minus number of parts)
//! - crank(lambda) = lambda_1 when lambda has no ones; otherwise
//!   #{parts > o} - o, where o is the number of ones
//! - the rank-set of lambda is [j - lambda_{j+1} : j = 0, 1, 2, ...], reading
//!   parts past the end as 0; its entries are strictly increasing
//!
//! Counting functions (all by exhaustive enumeration):
//!
//! - N(m,n), M(m,n): partitions of n with rank (resp. crank) m, exposed as
//!   the distributions of a [`RankCrankTable`]
//! - `q_count(m,n)`: partitions of n whose rank-set contains m
//! - `p_rank_at_least(m,n)`: partitions of n with rank >= -m
//! - cumulative sums N_{<=m}(n), M_{<=m}(n) over |r| <= m, and moments
//!   sum_m m^k N(m,n) etc.
//!
//! The single irregular point is n = 1: the crank of (1) is -1, and the
//! adjusted convention ([`CrankConvention::AdjustedAtOne`]) replaces the raw
//! n = 1 distribution by M(0,1) = -1, M(1,1) = M(-1,1) = 1. That signed
//! adjustment keeps every crank identity below uniform in n; it is a table
//! construction flag and never leaks into the per-partition [`Partition::crank`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::partition::{count_partitions, visit_partitions, Part, Partition, PartitionError};

impl Partition {
    /// Dyson's rank: largest part minus number of parts. The empty partition
    /// has no rank (domain error), hence `None`.
    pub fn rank(&self) -> Option<i64> {
        if self.is_empty() {
            return None;
        }
        Some(rank_of(self.parts()))
    }

    /// The Andrews-Garvan crank: the largest part if there are no ones,
    /// otherwise (number of parts larger than the number of ones) minus
    /// (number of ones). `None` for the empty partition.
    pub fn crank(&self) -> Option<i64> {
        if self.is_empty() {
            return None;
        }
        Some(crank_of(self.parts()))
    }

    /// Whether m lies in the rank-set [j - lambda_{j+1}]_{j>=0} of this
    /// partition. The entries are strictly increasing, and from j = l(lambda)
    /// on they are just j itself, so the empty partition's rank-set is all of
    /// {0, 1, 2, ...}: every m >= 0 is a member, no m < 0 ever is.
    pub fn rank_set_contains(&self, m: i64) -> bool {
        let len = self.num_parts();
        if m >= len as i64 {
            // j = m >= l(lambda) gives entry m - 0 = m.
            return true;
        }
        for (j, &part) in self.parts().iter().enumerate() {
            let v = j as i64 - i64::from(part);
            if v == m {
                return true;
            }
            if v > m {
                break; // entries only grow from here
            }
        }
        false
    }
}

fn rank_of(parts: &[Part]) -> i64 {
    debug_assert!(!parts.is_empty());
    i64::from(parts[0]) - parts.len() as i64
}

fn crank_of(parts: &[Part]) -> i64 {
    debug_assert!(!parts.is_empty());
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count() as i64;
    if ones == 0 {
        i64::from(parts[0])
    } else {
        let bigger = parts.iter().take_while(|&&p| i64::from(p) > ones).count() as i64;
        bigger - ones
    }
}

fn rank_set_contains_slice(parts: &[Part], m: i64) -> bool {
    if m >= parts.len() as i64 {
        return true;
    }
    for (j, &part) in parts.iter().enumerate() {
        let v = j as i64 - i64::from(part);
        if v == m {
            return true;
        }
        if v > m {
            break;
        }
    }
    false
}

/// q(m,n): the number of partitions of n whose rank-set contains m
/// (m >= 0). Exhaustive count over the partition enumeration; q(m,0) = 1
/// since the empty partition's rank-set contains every m >= 0.
pub fn q_count(m: u32, n: u32) -> u64 {
    let m = i64::from(m);
    let mut count = 0u64;
    visit_partitions(n, |parts| {
        if rank_set_contains_slice(parts, m) {
            count += 1;
        }
    });
    count
}

/// One row of q(.,n): the vector [q(0,n), q(1,n), ..., q(m_max,n)] from a
/// single enumeration pass. Per partition, the rank-set entries below
/// l(lambda) are marked individually (they are distinct), and the tail
/// {l(lambda), l(lambda)+1, ...} is applied as a suffix increment.
pub fn q_row(n: u32, m_max: u32) -> Vec<u64> {
    let m_max = m_max as usize;
    let mut row = vec![0u64; m_max + 1];
    let mut suffix = vec![0u64; m_max + 2];
    visit_partitions(n, |parts| {
        for (j, &part) in parts.iter().enumerate() {
            let v = j as i64 - i64::from(part);
            if v >= 0 {
                let v = v as usize;
                if v <= m_max {
                    row[v] += 1;
                } else {
                    break;
                }
            }
        }
        let len = parts.len();
        if len <= m_max {
            suffix[len] += 1;
        }
    });
    let mut running = 0u64;
    for m in 0..=m_max {
        running += suffix[m];
        row[m] += running;
    }
    row
}

/// p(-m,n): the number of partitions of n with rank >= -m (m >= 0). The
/// empty partition is counted at n = 0 by convention, so
/// `p_rank_at_least(m, 0) = 1`; for m >= n the condition is vacuous and the
/// count is p(n).
pub fn p_rank_at_least(m: u32, n: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    let threshold = -i64::from(m);
    let mut count = 0u64;
    visit_partitions(n, |parts| {
        if rank_of(parts) >= threshold {
            count += 1;
        }
    });
    count
}

/// Whether [`RankCrankTable`] applies the signed n = 1 crank adjustment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CrankConvention {
    /// Distributions exactly as counted.
    Raw,
    /// Replace the n = 1 crank distribution by M(0,1) = -1,
    /// M(1,1) = M(-1,1) = 1 (sums still to p(1) = 1). No effect for n != 1.
    AdjustedAtOne,
}

/// Rank and crank distributions of the partitions of a fixed n, built in one
/// enumeration pass.
///
/// Counts are signed (`i64`) solely because the adjusted n = 1 crank
/// distribution contains a -1; raw counts are non-negative. At n = 0 both
/// distributions are defined as {0: 1} — the empty partition, whose rank and
/// crank are otherwise domain errors, carries the conventional value 0 here
/// so that each distribution sums to p(0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCrankTable {
    n: u32,
    convention: CrankConvention,
    rank_counts: BTreeMap<i64, i64>,
    crank_counts: BTreeMap<i64, i64>,
}

impl RankCrankTable {
    /// Count every partition of n once, classifying by rank and crank.
    pub fn build(n: u32, convention: CrankConvention) -> Self {
        let mut rank_counts = BTreeMap::new();
        let mut crank_counts = BTreeMap::new();
        if n == 0 {
            rank_counts.insert(0, 1);
            crank_counts.insert(0, 1);
        } else {
            visit_partitions(n, |parts| {
                *rank_counts.entry(rank_of(parts)).or_insert(0) += 1;
                *crank_counts.entry(crank_of(parts)).or_insert(0) += 1;
            });
            if n == 1 && convention == CrankConvention::AdjustedAtOne {
                crank_counts = BTreeMap::from([(-1, 1), (0, -1), (1, 1)]);
            }
        }
        RankCrankTable {
            n,
            convention,
            rank_counts,
            crank_counts,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn convention(&self) -> CrankConvention {
        self.convention
    }

    /// N(m,n): partitions of n with rank m.
    pub fn rank_count(&self, m: i64) -> i64 {
        self.rank_counts.get(&m).copied().unwrap_or(0)
    }

    /// M(m,n): partitions of n with crank m (adjusted at n = 1 if built so).
    pub fn crank_count(&self, m: i64) -> i64 {
        self.crank_counts.get(&m).copied().unwrap_or(0)
    }

    /// The full rank distribution, keyed by rank.
    pub fn rank_counts(&self) -> &BTreeMap<i64, i64> {
        &self.rank_counts
    }

    /// The full crank distribution, keyed by crank.
    pub fn crank_counts(&self) -> &BTreeMap<i64, i64> {
        &self.crank_counts
    }

    /// N_{<=m}(n) = sum over |r| <= m of N(r,n).
    pub fn n_leq(&self, m: u32) -> i64 {
        band_sum(&self.rank_counts, m)
    }

    /// M_{<=m}(n) = sum over |r| <= m of M(r,n).
    pub fn m_leq(&self, m: u32) -> i64 {
        band_sum(&self.crank_counts, m)
    }

    /// M(<=m, n): partitions with crank at most m (one-sided sum).
    pub fn crank_at_most(&self, m: i64) -> i64 {
        self.crank_counts.range(..=m).map(|(_, &c)| c).sum()
    }

    /// N(<=m, n): partitions with rank at most m (one-sided sum).
    pub fn rank_at_most(&self, m: i64) -> i64 {
        self.rank_counts.range(..=m).map(|(_, &c)| c).sum()
    }

    /// k-th rank moment sum_m m^k N(m,n). Every rank of a partition of n
    /// lies in [-n, n], so summing over the observed distribution is already
    /// the exact full sum — no truncation error exists to control.
    pub fn rank_moment(&self, k: u32) -> Result<i64, PartitionError> {
        moment(&self.rank_counts, k, Half::Both)
    }

    /// k-th crank moment sum_m m^k M(m,n), with the n = 1 adjustment if this
    /// table carries it.
    pub fn crank_moment(&self, k: u32) -> Result<i64, PartitionError> {
        moment(&self.crank_counts, k, Half::Both)
    }

    /// Positive half-moment sum_{m>=1} m^k N(m,n). By rank symmetry the even
    /// full moments are exactly twice these.
    pub fn positive_rank_moment(&self, k: u32) -> Result<i64, PartitionError> {
        moment(&self.rank_counts, k, Half::Positive)
    }

    /// Positive half-moment sum_{m>=1} m^k M(m,n).
    pub fn positive_crank_moment(&self, k: u32) -> Result<i64, PartitionError> {
        moment(&self.crank_counts, k, Half::Positive)
    }
}

fn band_sum(counts: &BTreeMap<i64, i64>, m: u32) -> i64 {
    let m = i64::from(m);
    counts.range(-m..=m).map(|(_, &c)| c).sum()
}

enum Half {
    Both,
    Positive,
}

fn moment(counts: &BTreeMap<i64, i64>, k: u32, half: Half) -> Result<i64, PartitionError> {
    let overflow = PartitionError::Overflow {
        context: "moment sum",
    };
    let mut total = 0i64;
    for (&m, &count) in counts {
        if matches!(half, Half::Positive) && m < 1 {
            continue;
        }
        let pow = m.checked_pow(k).ok_or(overflow.clone())?;
        let term = pow.checked_mul(count).ok_or(overflow.clone())?;
        total = total.checked_add(term).ok_or(overflow.clone())?;
    }
    Ok(total)
}

/// N_{<=m}(n) as a standalone call (builds the rank distribution for n).
pub fn n_leq(m: u32, n: u32) -> i64 {
    RankCrankTable::build(n, CrankConvention::AdjustedAtOne).n_leq(m)
}

/// M_{<=m}(n) as a standalone call, always under the adjusted n = 1
/// convention (the raw variant is available through [`RankCrankTable`]).
pub fn m_leq(m: u32, n: u32) -> i64 {
    RankCrankTable::build(n, CrankConvention::AdjustedAtOne).m_leq(m)
}

/// k-th rank moment of n.
pub fn rank_moment(k: u32, n: u32) -> Result<i64, PartitionError> {
    RankCrankTable::build(n, CrankConvention::AdjustedAtOne).rank_moment(k)
}

/// k-th crank moment of n (adjusted convention at n = 1).
pub fn crank_moment(k: u32, n: u32) -> Result<i64, PartitionError> {
    RankCrankTable::build(n, CrankConvention::AdjustedAtOne).crank_moment(k)
}

/// Positive rank half-moment sum_{m>=1} m^k N(m,n).
pub fn positive_rank_moment(k: u32, n: u32) -> Result<i64, PartitionError> {
    RankCrankTable::build(n, CrankConvention::AdjustedAtOne).positive_rank_moment(k)
}

/// Positive crank half-moment sum_{m>=1} m^k M(m,n) (adjusted at n = 1).
pub fn positive_crank_moment(k: u32, n: u32) -> Result<i64, PartitionError> {
    RankCrankTable::build(n, CrankConvention::AdjustedAtOne).positive_crank_moment(k)
}

/// p(n) as a signed value, for identities that mix counts and signed sums.
pub(crate) fn p_signed(n: u32) -> i64 {
    count_partitions(n).expect("p(n) in range") as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[Part]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(p(&[7, 7, 6, 4, 3, 3, 2, 2, 2]).rank(), Some(-2));
        assert_eq!(p(&[4]).rank(), Some(3));
        assert_eq!(Partition::empty().rank(), None);
    }

    #[test]
    fn crank_examples() {
        // No ones: crank is the largest part.
        assert_eq!(p(&[4]).crank(), Some(4));
        // (1): one 1, no part exceeds 1, so 0 - 1.
        assert_eq!(p(&[1]).crank(), Some(-1));
        // (2,1,1): two 1s, no part exceeds 2, so 0 - 2.
        assert_eq!(p(&[2, 1, 1]).crank(), Some(-2));
        assert_eq!(p(&[3, 1]).crank(), Some(0));
        assert_eq!(Partition::empty().crank(), None);
    }

    #[test]
    fn crank_distribution_n4() {
        // The five partitions of 4 have cranks 4, 0, 2, -2, -4: symmetric,
        // one partition each.
        let t = RankCrankTable::build(4, CrankConvention::Raw);
        let expect = BTreeMap::from([(-4, 1), (-2, 1), (0, 1), (2, 1), (4, 1)]);
        assert_eq!(t.crank_counts(), &expect);
    }

    #[test]
    fn rank_set_examples() {
        let lambda = p(&[5, 5, 4, 3, 1]);
        assert!(lambda.rank_set_contains(0)); // j = 3: 3 - lambda_4 = 0
        assert!(!lambda.rank_set_contains(1)); // entries jump -2, 0, 3, ...
        assert!(lambda.rank_set_contains(5)); // tail j >= l(lambda)
        assert!(!lambda.rank_set_contains(-1));
        assert!(Partition::empty().rank_set_contains(0));
        assert!(Partition::empty().rank_set_contains(7));
        assert!(!Partition::empty().rank_set_contains(-1));
    }

    #[test]
    fn q_count_examples() {
        // Partitions of 4 whose rank-set contains 1: (4), (2,1,1), (1,1,1,1).
        assert_eq!(q_count(1, 4), 3);
        // Rank-set of the empty partition contains every m >= 0.
        assert_eq!(q_count(0, 0), 1);
        assert_eq!(q_count(9, 0), 1);
        // Hand count: the six of (5,1),(4,1,1),(3,1,1,1),(2,2,2),(2,1^4),(1^6).
        assert_eq!(q_count(0, 6), 6);
    }

    #[test]
    fn q_row_matches_q_count() {
        for n in 0..=18u32 {
            let row = q_row(n, n + 2);
            for m in 0..=n + 2 {
                assert_eq!(row[m as usize], q_count(m, n), "q({m},{n})");
            }
        }
    }

    #[test]
    fn p_rank_at_least_examples() {
        // Ranks of the partitions of 4 are 3, 1, 0, -1, -3.
        assert_eq!(p_rank_at_least(1, 4), 4);
        assert_eq!(p_rank_at_least(0, 4), 3);
        assert_eq!(p_rank_at_least(5, 0), 1);
        for n in 1..=20u32 {
            // Every rank of a partition of n is >= -n.
            assert_eq!(p_rank_at_least(n, n), count_partitions(n).unwrap());
        }
    }

    #[test]
    fn cumulative_band_sums() {
        // Only (2,2) has rank 0 among partitions of 4.
        assert_eq!(n_leq(0, 4), 1);
        // Adjusted n = 1 crank: M(0,1) = -1.
        assert_eq!(m_leq(0, 1), -1);
        assert_eq!(m_leq(1, 1), 1);
        for n in 2..=25u32 {
            let pn = count_partitions(n).unwrap() as i64;
            assert_eq!(n_leq(n - 1, n), pn, "all ranks lie within ±(n-1)");
            assert_eq!(m_leq(n - 1, n), pn - 2, "only (n) and (1^n) escape");
        }
    }

    #[test]
    fn raw_crank_at_one_differs_from_adjusted() {
        let raw = RankCrankTable::build(1, CrankConvention::Raw);
        assert_eq!(raw.crank_counts(), &BTreeMap::from([(-1, 1)]));
        let adj = RankCrankTable::build(1, CrankConvention::AdjustedAtOne);
        assert_eq!(
            adj.crank_counts(),
            &BTreeMap::from([(-1, 1), (0, -1), (1, 1)])
        );
        // Both sum to p(1).
        assert_eq!(adj.crank_counts().values().sum::<i64>(), 1);
    }

    #[test]
    fn moment_examples() {
        // Ranks of partitions of 4: 3,1,0,-1,-3 -> squares sum to 20.
        assert_eq!(rank_moment(2, 4).unwrap(), 20);
        // (1) has rank 0: no positive-rank mass at n = 1.
        assert_eq!(positive_rank_moment(1, 1).unwrap(), 0);
        // Adjusted crank at n = 1: positive side carries exactly m = 1.
        assert_eq!(positive_crank_moment(1, 1).unwrap(), 1);
        assert_eq!(crank_moment(1, 1).unwrap(), 0);
    }

    #[test]
    fn moment_symmetry_small_range() {
        for n in 1..=16u32 {
            for k in [1u32, 3, 5] {
                assert_eq!(rank_moment(k, n).unwrap(), 0, "odd rank moment n={n}");
                if n >= 2 {
                    assert_eq!(crank_moment(k, n).unwrap(), 0, "odd crank moment n={n}");
                }
            }
            for k in [2u32, 4, 6] {
                assert_eq!(
                    rank_moment(k, n).unwrap(),
                    2 * positive_rank_moment(k, n).unwrap()
                );
                assert_eq!(
                    crank_moment(k, n).unwrap(),
                    2 * positive_crank_moment(k, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn crank_second_moment_dominates_small_range() {
        for n in 1..=16u32 {
            assert!(crank_moment(2, n).unwrap() > rank_moment(2, n).unwrap());
        }
    }

    #[test]
    fn moment_overflow_is_detected() {
        let t = RankCrankTable::build(30, CrankConvention::Raw);
        assert!(matches!(
            t.rank_moment(31),
            Err(PartitionError::Overflow { .. })
        ));
    }
}
