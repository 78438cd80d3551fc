//! Durfee rectangle symbols: the (alpha, beta) coordinates of a partition
//! relative to its maximal m-Durfee rectangle.
//!
//! For a partition lambda and m >= 0, the m-Durfee rectangle is the largest
//! rectangle of shape (m+j) x j (m+j rows, j columns) contained in the
//! Ferrers diagram; j = 0 is always admissible, so the rectangle exists even
//! when lambda has at most m parts. The symbol records what the rectangle
//! leaves out:
//!
//! - alpha: the columns strictly to the right of the rectangle, restricted
//!   to its m+j rows (so alpha_1 <= m+j), as a partition;
//! - beta: the rows strictly below the rectangle (so beta_1 <= j), as a
//!   partition.
//!
//! Weight bookkeeping: |lambda| = |alpha| + |beta| + j(m+j). When j = 0 the
//! convention is (conjugate(lambda), empty) over an m x 0 rectangle, which
//! is what the general column/row reading produces.
//!
//! Rendered like `(4,3,3,2 / 3,2,2,2)_{5×3}`: alpha row, beta row, and the
//! rectangle shape (m+j)xj as subscript.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::partition::{Part, Partition};

/// Rejections from [`DurfeeSymbol::new`], with the offending values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    /// alpha describes columns of an (m+j)-row rectangle flank, so no alpha
    /// part may exceed m+j.
    #[error("alpha_1 = {alpha1} exceeds the rectangle height m+j = {limit}")]
    AlphaPartTooLarge { alpha1: Part, limit: u32 },
    /// beta describes rows below a j-column rectangle, so no beta part may
    /// exceed j.
    #[error("beta_1 = {beta1} exceeds the rectangle width j = {limit}")]
    BetaPartTooLarge { beta1: Part, limit: u32 },
    /// A width-0 rectangle has nothing below it: j = 0 forces beta empty.
    #[error("j = 0 admits no rows below the rectangle, but beta = {beta} is non-empty")]
    BetaBelowEmptyRectangle { beta: Partition },
}

/// A partition in m-Durfee rectangle coordinates. Constructing one validates
/// the rectangle invariants eagerly, so every held value corresponds to an
/// actual partition whose maximal m-Durfee rectangle has exactly this j
/// (maximality follows from beta_1 <= j: a larger rectangle would need row
/// m+j+1 to reach width j+1, which is beta_1 > j).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DurfeeSymbol {
    m: u32,
    j: u32,
    alpha: Partition,
    beta: Partition,
}

impl DurfeeSymbol {
    /// Validate and build a symbol over an (m+j) x j rectangle.
    pub fn new(m: u32, j: u32, alpha: Partition, beta: Partition) -> Result<Self, SymbolError> {
        if alpha.first_part() > m + j {
            return Err(SymbolError::AlphaPartTooLarge {
                alpha1: alpha.first_part(),
                limit: m + j,
            });
        }
        if j == 0 && !beta.is_empty() {
            return Err(SymbolError::BetaBelowEmptyRectangle { beta });
        }
        if beta.first_part() > j {
            return Err(SymbolError::BetaPartTooLarge {
                beta1: beta.first_part(),
                limit: j,
            });
        }
        let sym = DurfeeSymbol { m, j, alpha, beta };
        debug_assert_eq!(
            to_symbol(&sym.to_partition(), m),
            sym,
            "rectangle invariants should force maximality"
        );
        Ok(sym)
    }

    /// The offset m (rectangle is m+j rows by j columns).
    pub fn m(&self) -> u32 {
        self.m
    }

    /// The rectangle width j.
    pub fn j(&self) -> u32 {
        self.j
    }

    /// The rectangle height m + j.
    pub fn rows(&self) -> u32 {
        self.m + self.j
    }

    /// Columns right of the rectangle.
    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    /// Rows below the rectangle.
    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    /// |alpha| + |beta| + j(m+j), the weight of the encoded partition.
    pub fn weight(&self) -> u64 {
        self.alpha.weight() + self.beta.weight() + u64::from(self.j) * u64::from(self.m + self.j)
    }

    /// Reassemble the partition: row r of the rectangle block (1 <= r <= m+j)
    /// has length j + #{i : alpha_i >= r}, and beta supplies the rows below.
    /// Total by construction; rows of length 0 (possible only when j = 0)
    /// are dropped.
    pub fn to_partition(&self) -> Partition {
        let rows = (self.m + self.j) as usize;
        let mut parts: Vec<Part> = Vec::with_capacity(rows + self.beta.num_parts());
        for r in 1..=rows {
            let overhang = self
                .alpha
                .parts()
                .iter()
                .take_while(|&&a| a as usize >= r)
                .count();
            let len = self.j + overhang as Part;
            if len > 0 {
                parts.push(len);
            }
        }
        parts.extend_from_slice(self.beta.parts());
        Partition::from_sorted_unchecked(parts)
    }
}

impl fmt::Display for DurfeeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn row(f: &mut fmt::Formatter<'_>, p: &Partition) -> fmt::Result {
            if p.is_empty() {
                return write!(f, "∅");
            }
            for (i, part) in p.parts().iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{part}")?;
            }
            Ok(())
        }
        write!(f, "(")?;
        row(f, &self.alpha)?;
        write!(f, " / ")?;
        row(f, &self.beta)?;
        write!(f, ")_{{{}×{}}}", self.m + self.j, self.j)
    }
}

/// The width j of the maximal m-Durfee rectangle of lambda: the largest j
/// such that lambda has at least m+j parts, each of size >= j. Since the
/// parts are sorted this is just lambda_{m+j} >= j, checked by scanning j
/// downward from the upper bound min(lambda_1, l(lambda) - m).
pub fn durfee_index(lambda: &Partition, m: u32) -> u32 {
    let upper = (lambda.num_parts() as i64 - i64::from(m)).min(i64::from(lambda.first_part()));
    let mut j = upper.max(0) as u32;
    while j > 0 {
        if lambda.part((m + j) as usize) >= j {
            break;
        }
        j -= 1;
    }
    j
}

/// Decompose lambda along its maximal m-Durfee rectangle. Infallible: every
/// partition has such a rectangle (j = 0 at worst, in which case alpha is
/// the conjugate of lambda and beta is empty).
pub fn to_symbol(lambda: &Partition, m: u32) -> DurfeeSymbol {
    let j = durfee_index(lambda, m);
    let rows = (m + j) as usize;
    let within = &lambda.parts()[..rows.min(lambda.num_parts())];

    // Column j+c of the diagram, cut off at the rectangle rows, has height
    // #{r <= m+j : lambda_r >= j+c}; the columns run c = 1..=lambda_1 - j.
    let width = lambda.first_part().saturating_sub(j);
    let mut alpha: Vec<Part> = Vec::with_capacity(width as usize);
    for c in 1..=width {
        let height = within
            .iter()
            .take_while(|&&p| p >= j + c)
            .count();
        alpha.push(height as Part);
    }

    let beta: Vec<Part> = lambda
        .parts()
        .get(rows..)
        .map(<[Part]>::to_vec)
        .unwrap_or_default();

    DurfeeSymbol {
        m,
        j,
        alpha: Partition::from_sorted_unchecked(alpha),
        beta: Partition::from_sorted_unchecked(beta),
    }
}
