//! Integer partitions: representation, enumeration, exact counting, conjugation.
//!
//! A partition of n is a weakly decreasing sequence of positive integers
//! summing to n. The empty partition is the unique partition of 0.
//!
//! - [`Partition`]: validated immutable partition value
//! - [`enumerate_partitions`]: all partitions of n in lexicographically
//!   decreasing order, e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
//! - [`count_partitions`]: p(n) by dynamic programming, exact `u64` with
//!   overflow detection (p(100) = 190569292 fits comfortably; the first
//!   overflow of u64 is far beyond every range used here)
//! - [`Partition::conjugate`]: transpose of the Ferrers diagram
//! - [`Partition::smallest_part`]: smallest part, with an explicit +infinity
//!   value for the empty partition so comparisons stay total

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Part values. Weights stay in `u64`; parts of any partition handled here
/// fit easily in `u32`.
pub type Part = u32;

/// Errors from partition construction and counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    /// Parts must be weakly decreasing.
    #[error("parts are not weakly decreasing: {parts:?}")]
    NotSorted { parts: Vec<Part> },
    /// Parts must be positive.
    #[error("partitions have positive parts; found a zero")]
    ZeroPart,
    /// An exact integer computation exceeded the fixed-width count type.
    #[error("exact integer overflow in {context}")]
    Overflow { context: &'static str },
}

/// The smallest part of a partition, where the empty partition's smallest
/// part is +infinity (the empty minimum). Keeping the sentinel as a tagged
/// value makes every comparison against it total and explicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SmallestPart {
    /// Smallest part of a non-empty partition.
    Finite(Part),
    /// The empty partition: min over no parts.
    Infinite,
}

impl SmallestPart {
    /// True when this value is at most `other` (total, +inf compares largest).
    pub fn le(self, other: SmallestPart) -> bool {
        self <= other
    }
}

impl fmt::Display for SmallestPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallestPart::Finite(p) => write!(f, "{p}"),
            SmallestPart::Infinite => write!(f, "∞"),
        }
    }
}

/// A partition: weakly decreasing positive parts. Immutable once built.
///
/// Ordering is lexicographic on the parts, which matches the enumeration
/// order of [`enumerate_partitions`] reversed; it is used for canonical
/// "first counterexample" reporting.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<Part>,
}

impl Partition {
    /// The empty partition (the unique partition of 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from weakly decreasing positive parts.
    pub fn new(parts: Vec<Part>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotSorted { parts });
        }
        Ok(Partition { parts })
    }

    /// Build from positive parts in any order (sorted descending here).
    pub fn from_unsorted(mut parts: Vec<Part>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Internal constructor for parts already known to be valid.
    pub(crate) fn from_sorted_unchecked(parts: Vec<Part>) -> Self {
        debug_assert!(!parts.contains(&0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// Number of parts, usually written l(lambda).
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Largest part, or 0 for the empty partition (the usual convention
    /// lambda_1 = 0 when there is no part).
    pub fn first_part(&self) -> Part {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The i-th part (1-indexed), reading parts beyond the length as 0.
    /// Index arithmetic on partitions routinely refers to lambda_{j+1} for
    /// j up to and past l(lambda); this accessor encodes that convention.
    pub fn part(&self, i: usize) -> Part {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Smallest part, +infinity for the empty partition.
    pub fn smallest_part(&self) -> SmallestPart {
        match self.parts.last() {
            Some(&p) => SmallestPart::Finite(p),
            None => SmallestPart::Infinite,
        }
    }

    /// Conjugate partition: transpose the Ferrers diagram. Column i of the
    /// diagram has height #{r : lambda_r >= i}, so the conjugate of
    /// (5,5,1) is (3,2,2,2,2) and conjugation is an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part() as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 1..=cols {
            // Parts are sorted, so the count of parts >= c is the position
            // of the first part below c.
            let height = self.parts.iter().take_while(|&&p| p as usize >= c).count();
            out.push(height as Part);
        }
        Partition { parts: out }
    }
}

impl fmt::Display for Partition {
    /// Renders as `(5,4,2,1)`; the empty partition as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Iterator over all partitions of n in lexicographically decreasing order.
///
/// The first item is (n) (or the empty partition when n = 0) and the last is
/// (1,...,1). Produced by [`enumerate_partitions`].
pub struct PartitionIter {
    buf: Vec<Part>,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

impl PartitionIter {
    fn new(n: u32) -> Self {
        let buf = if n == 0 { Vec::new() } else { vec![n] };
        PartitionIter {
            buf,
            state: IterState::Fresh,
        }
    }

    /// Advance and return the next partition as a slice, without allocating.
    /// The slice borrows the iterator's internal buffer.
    pub fn next_slice(&mut self) -> Option<&[Part]> {
        match self.state {
            IterState::Fresh => {
                self.state = IterState::Running;
                Some(&self.buf)
            }
            IterState::Running => {
                if self.advance() {
                    Some(&self.buf)
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
            IterState::Done => None,
        }
    }

    /// Replace the buffer with its successor in lexicographically decreasing
    /// order. Returns false when the current buffer is all ones (the last
    /// partition).
    fn advance(&mut self) -> bool {
        // Rightmost part that can still be decremented.
        let Some(i) = self.buf.iter().rposition(|&p| p > 1) else {
            return false;
        };
        // Everything after position i is a run of 1s; together with the unit
        // taken from buf[i] it gets redistributed greedily into parts of size
        // at most the decremented value, keeping the result maximal among
        // partitions below the current one.
        let mut rest = (self.buf.len() - i - 1) as u32 + 1;
        self.buf[i] -= 1;
        self.buf.truncate(i + 1);
        let cap = self.buf[i];
        while rest > 0 {
            let next = rest.min(cap);
            self.buf.push(next);
            rest -= next;
        }
        true
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.next_slice()
            .map(|s| Partition::from_sorted_unchecked(s.to_vec()))
    }
}

/// All partitions of n, lexicographically decreasing. `enumerate_partitions(0)`
/// yields exactly the empty partition.
pub fn enumerate_partitions(n: u32) -> PartitionIter {
    PartitionIter::new(n)
}

/// Visit every partition of n (as a sorted slice) without per-item
/// allocation. The hot path for the exhaustive verifiers.
pub(crate) fn visit_partitions<F: FnMut(&[Part])>(n: u32, mut f: F) {
    let mut it = PartitionIter::new(n);
    while let Some(s) = it.next_slice() {
        f(s);
    }
}

/// p(n), the number of partitions of n, by the textbook coin-counting DP:
/// dp[v] after admitting part k counts partitions of v with parts <= k.
/// Exact `u64` arithmetic; overflow is detected and reported, never wrapped.
///
/// No enumeration is involved, so this serves as an independent check on the
/// enumerator (and vice versa).
pub fn count_partitions(n: u32) -> Result<u64, PartitionError> {
    let n = n as usize;
    let mut dp = vec![0u64; n + 1];
    dp[0] = 1;
    for k in 1..=n {
        for v in k..=n {
            dp[v] = dp[v]
                .checked_add(dp[v - k])
                .ok_or(PartitionError::Overflow {
                    context: "count_partitions",
                })?;
        }
    }
    Ok(dp[n])
}
