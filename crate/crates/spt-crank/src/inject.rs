//! Weight-preserving injections from Q(m,n) into P(-m,n), class by class.
//!
//! For m >= 1 the combined map dispatches the six maps phi1..phi6 on the
//! classes Q1..Q6, landing in P1..P6. For m = 0 the maps phi5/phi6 break
//! down (their rows can fail to be partitions), so Q5/Q6 refine into
//! Qbar1..Qbar5 and five replacement maps psi1..psi5 route
//! Qbar1 -> Pbar1, Qbar2 -> Pbar2, Qbar3 -> Pbar3, Qbar4 -> P7,
//! Qbar5 -> P8.
//!
//! Every map is constructive: it moves cells between the rectangle, the
//! alpha row, and the beta row, preserving total weight. Where a map needs
//! an auxiliary cut index (the minimal k for phi4, the maximal k for
//! phi5/phi6/psi1/psi2, the pair k, h for psi5), the index is recorded in
//! the returned [`MappingTrace`] so failures reproduce minimally.
//!
//! Each map comes with an explicit inverse (`*_inv`). The inverses are
//! total on their syntactic codomain class, but a round trip is guaranteed
//! only on the forward image; applied outside it they either produce a
//! malformed row or land in the wrong class, and both cases surface as
//! [`InjectError::OutsideImage`]. Two maps are genuine bijections (phi3
//! with P3, psi4 with P7); phi2's image is all of P2 except the single
//! symbol (empty, empty) over a (m+1) x 1 rectangle at n = m+1.

use std::fmt;

use serde::Serialize;

use crate::classify::{classify_p, classify_q, ClassLabel, ClassifyError};
use crate::durfee::{DurfeeSymbol, SymbolError};
use crate::partition::{Part, Partition};

/// Names of the eleven constructive maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MapName {
    Phi1,
    Phi2,
    Phi3,
    Phi4,
    Phi5,
    Phi6,
    Psi1,
    Psi2,
    Psi3,
    Psi4,
    Psi5,
}

impl MapName {
    pub fn as_str(self) -> &'static str {
        use MapName::*;
        match self {
            Phi1 => "phi1",
            Phi2 => "phi2",
            Phi3 => "phi3",
            Phi4 => "phi4",
            Phi5 => "phi5",
            Phi6 => "phi6",
            Psi1 => "psi1",
            Psi2 => "psi2",
            Psi3 => "psi3",
            Psi4 => "psi4",
            Psi5 => "psi5",
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for MapName {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// One application of a map: which map ran, what went in and came out, the
/// class pair, and any auxiliary indices the construction selected.
///
/// Invariants (checked on construction): input and output have equal
/// weight, and the class pair is one the dispatch table permits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MappingTrace {
    pub map: MapName,
    pub input: DurfeeSymbol,
    pub output: DurfeeSymbol,
    pub source_class: ClassLabel,
    pub target_class: ClassLabel,
    /// The cut index k (forward) or k' (inverse), when the map uses one.
    pub k: Option<u32>,
    /// The secondary index h (forward) or h' (inverse), when the map uses one.
    pub h: Option<u32>,
}

impl fmt::Display for MappingTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} [{}] -> {} [{}]",
            self.map, self.input, self.source_class, self.output, self.target_class
        )?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(h) = self.h {
            write!(f, " h={h}")?;
        }
        Ok(())
    }
}

/// Failures of the maps and their inverses.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InjectError {
    #[error("{map} expects a symbol in {expected}, found one in {found}")]
    WrongClass {
        map: MapName,
        expected: ClassLabel,
        found: ClassLabel,
    },
    #[error("{map} is not defined at offset m = {m}")]
    WrongOffset { map: MapName, m: u32 },
    #[error("no index satisfies the selection rule of {map} on {symbol}")]
    NoAuxiliaryIndex { map: MapName, symbol: DurfeeSymbol },
    #[error("{symbol} is outside the image of {map}; the inverse does not apply")]
    OutsideImage { map: MapName, symbol: DurfeeSymbol },
    #[error("{map} built an invalid {context} row {parts:?}")]
    MalformedRow {
        map: MapName,
        context: &'static str,
        parts: Vec<i64>,
    },
    #[error("{map} violated its contract on {symbol}: {detail}")]
    ContractViolation {
        map: MapName,
        symbol: DurfeeSymbol,
        detail: String,
    },
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// 1-based row access in `i64`, reading 0 past the end (the alpha_{s+1} = 0
/// convention the constructions rely on).
#[derive(Clone, Copy)]
struct Row<'a> {
    parts: &'a [Part],
}

impl<'a> Row<'a> {
    fn of(p: &'a Partition) -> Self {
        Row { parts: p.parts() }
    }

    fn get(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.parts.len() {
            i64::from(self.parts[i as usize - 1])
        } else {
            0
        }
    }

    fn len(&self) -> i64 {
        self.parts.len() as i64
    }
}

/// Assemble a row from construction arithmetic: strip trailing zeros, then
/// insist the remainder is a weakly decreasing list of positive parts.
fn build_row(map: MapName, context: &'static str, mut parts: Vec<i64>) -> Result<Partition, InjectError> {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    let valid = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] >= w[1]);
    if !valid {
        return Err(InjectError::MalformedRow { map, context, parts });
    }
    let parts: Vec<Part> = parts.iter().map(|&p| p as Part).collect();
    Ok(Partition::new(parts).expect("row validated above"))
}

fn symbol_from(
    map: MapName,
    m: u32,
    j: i64,
    first: Vec<i64>,
    second: Vec<i64>,
) -> Result<DurfeeSymbol, InjectError> {
    let alpha = build_row(map, "first", first)?;
    let beta = build_row(map, "second", second)?;
    let j = u32::try_from(j).map_err(|_| InjectError::MalformedRow {
        map,
        context: "rectangle",
        parts: vec![j],
    })?;
    Ok(DurfeeSymbol::new(m, j, alpha, beta)?)
}

fn expect_q(map: MapName, sym: &DurfeeSymbol, expected: ClassLabel) -> Result<ClassLabel, InjectError> {
    let found = classify_q(sym)?;
    if found != expected {
        return Err(InjectError::WrongClass { map, expected, found });
    }
    Ok(found)
}

fn expect_p(map: MapName, sym: &DurfeeSymbol, expected: ClassLabel) -> Result<ClassLabel, InjectError> {
    let found = classify_p(sym)?;
    if found != expected {
        return Err(InjectError::WrongClass { map, expected, found });
    }
    Ok(found)
}

fn require_offset(map: MapName, sym: &DurfeeSymbol, zero: bool) -> Result<(), InjectError> {
    if (sym.m() == 0) != zero {
        return Err(InjectError::WrongOffset { map, m: sym.m() });
    }
    Ok(())
}

/// Finish a forward application: the output must classify into exactly the
/// P-class the routing table names, with weight preserved.
fn forward_trace(
    map: MapName,
    input: &DurfeeSymbol,
    output: DurfeeSymbol,
    source: ClassLabel,
    k: Option<i64>,
    h: Option<i64>,
) -> Result<MappingTrace, InjectError> {
    if output.weight() != input.weight() {
        return Err(InjectError::ContractViolation {
            map,
            symbol: input.clone(),
            detail: format!("weight changed from {} to {}", input.weight(), output.weight()),
        });
    }
    let target = classify_p(&output)?;
    if source.route() != Some(target) {
        return Err(InjectError::ContractViolation {
            map,
            symbol: input.clone(),
            detail: format!("{source} routed to {target}, expected {:?}", source.route()),
        });
    }
    Ok(MappingTrace {
        map,
        input: input.clone(),
        output,
        source_class: source,
        target_class: target,
        k: k.map(|v| v as u32),
        h: h.map(|v| v as u32),
    })
}

/// Finish an inverse application: anything that breaks the round-trip
/// contract (weight, classification into the expected Q-class) marks the
/// input as lying outside the forward image.
fn inverse_trace(
    map: MapName,
    input: &DurfeeSymbol,
    output: DurfeeSymbol,
    source: ClassLabel,
    expected_q: ClassLabel,
    k: Option<i64>,
    h: Option<i64>,
) -> Result<MappingTrace, InjectError> {
    let outside = || InjectError::OutsideImage {
        map,
        symbol: input.clone(),
    };
    if output.weight() != input.weight() {
        return Err(outside());
    }
    let target = classify_q(&output).map_err(|_| outside())?;
    if target != expected_q {
        return Err(outside());
    }
    Ok(MappingTrace {
        map,
        input: input.clone(),
        output,
        source_class: source,
        target_class: target,
        k: k.map(|v| v as u32),
        h: h.map(|v| v as u32),
    })
}

// ---------------------------------------------------------------------------
// phi1: identity on Q1 (= P1 as a set of symbols).

fn phi1_full(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let source = expect_q(MapName::Phi1, sym, ClassLabel::Q1)?;
    forward_trace(MapName::Phi1, sym, sym.clone(), source, None, None)
}

/// Identity on Q1. The first classes of the two families coincide, so the
/// output is the input, now read as a P1 symbol.
pub fn phi1(sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    phi1_full(sym).map(|t| t.output)
}

// ---------------------------------------------------------------------------
// phi2: Q2 -> P2 over the same rectangle. Add 1 to every alpha part and pad
// with 1s to length t; subtract 1 from every beta part, dropping zeros.

fn phi2_full(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Phi2;
    let source = expect_q(map, sym, ClassLabel::Q2)?;
    let (a, b) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s, t) = (a.len(), b.len());

    let mut gamma: Vec<i64> = (1..=s).map(|i| a.get(i) + 1).collect();
    gamma.extend(std::iter::repeat_n(1, (t - s) as usize));
    let delta: Vec<i64> = (1..=t).map(|i| b.get(i) - 1).collect();

    let out = symbol_from(map, sym.m(), i64::from(sym.j()), gamma, delta)?;
    forward_trace(map, sym, out, source, None, None)
}

pub fn phi2(sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    phi2_full(sym).map(|t| t.output)
}

fn phi2_inv_full(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Phi2;
    let source = expect_p(map, sym, ClassLabel::P2)?;
    // The single P2 symbol with no preimage: (empty, empty) over the
    // (m+1) x 1 rectangle, i.e. the rectangle partition of n = m+1 itself.
    if sym.j() == 1 && sym.alpha().is_empty() && sym.beta().is_empty() {
        return Err(InjectError::OutsideImage {
            map,
            symbol: sym.clone(),
        });
    }
    let (g, d) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s1, t1) = (g.len(), d.len());

    let alpha: Vec<i64> = (1..=s1).map(|i| g.get(i) - 1).collect();
    let mut beta: Vec<i64> = (1..=t1).map(|i| d.get(i) + 1).collect();
    beta.extend(std::iter::repeat_n(1, (s1 - t1).max(0) as usize));

    let out = symbol_from(map, sym.m(), i64::from(sym.j()), alpha, beta)?;
    inverse_trace(map, sym, out, source, ClassLabel::Q2, None, None)
}

/// Inverse of [`phi2`], defined on all of P2 except the excluded symbol
/// (empty, empty) over a (m+1) x 1 rectangle.
pub fn phi2_inv(sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    phi2_inv_full(sym).map(|t| t.output)
}

// ---------------------------------------------------------------------------
// phi3: Q3 -> P3, growing the rectangle by one on each side. The top alpha
// part (= m+j), the top beta part (= j) and one smallest beta part (= 1)
// together supply the m + 2j + 1 cells the larger rectangle needs.

fn phi3_full(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Phi3;
    let source = expect_q(map, sym, ClassLabel::Q3)?;
    let (a, b) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s, t) = (a.len(), b.len());

    let mut gamma: Vec<i64> = (2..=s).map(|i| a.get(i) + 1).collect();
    gamma.extend(std::iter::repeat_n(1, (t - s - 1).max(0) as usize));
    let delta: Vec<i64> = (2..=t).map(|i| b.get(i) - 1).collect();

    let out = symbol_from(map, sym.m(), i64::from(sym.j()) + 1, gamma, delta)?;
    forward_trace(map, sym, out, source, None, None)
}

pub fn phi3(sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    phi3_full(sym).map(|t| t.output)
}

fn phi3_inv_full(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Phi3;
    let source = expect_p(map, sym, ClassLabel::P3)?;
    let m = i64::from(sym.m());
    let j1 = i64::from(sym.j());
    let (g, d) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s1, t1) = (g.len(), d.len());

    // Parts of gamma >= 2 came from alpha (shifted up by 1); parts = 1 were
    // padding that restores trailing 1s of beta.
    let mut alpha: Vec<i64> = vec![m + j1 - 1];
    alpha.extend((1..=s1).map(|i| g.get(i)).filter(|&p| p >= 2).map(|p| p - 1));
    let mut beta: Vec<i64> = vec![j1 - 1];
    beta.extend((1..=t1).map(|i| d.get(i) + 1));
    beta.extend(std::iter::repeat_n(1, (s1 + 1 - t1).max(0) as usize));

    let out = symbol_from(map, sym.m(), j1 - 1, alpha, beta)?;
    inverse_trace(map, sym, out, source, ClassLabel::Q3, None, None)
}

/// Inverse of [`phi3`]; the pair is a bijection between Q3 and P3.
pub fn phi3_inv(sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    phi3_inv_full(sym).map(|t| t.output)
}

// ---------------------------------------------------------------------------
// phi4: Q4 -> P4 over the same rectangle, cutting both rows at the minimal
// index k with alpha_{k+1} <= beta_k - 1 and alpha_k >= beta_{k+1} - 1 and
// swapping the tails (beta's tail loses a cell per part, alpha's gains one,
// and the parts 2, 1^{t-s-1} pad the new second row).

/// Q4 -> P4. The trace records the cut index k.
pub fn phi4(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Phi4;
    let source = expect_q(map, sym, ClassLabel::Q4)?;
    let (a, b) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s, t) = (a.len(), b.len());

    let k = (1..=s)
        .find(|&k| a.get(k + 1) < b.get(k) && a.get(k) >= b.get(k + 1) - 1)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;

    let mut gamma: Vec<i64> = vec![a.get(1) - 1];
    gamma.extend((2..=k).map(|i| a.get(i)));
    gamma.extend((k + 1..=t).map(|i| b.get(i) - 1));
    let mut delta: Vec<i64> = (1..=k).map(|i| b.get(i)).collect();
    delta.extend((k + 1..=s).map(|i| a.get(i) + 1));
    delta.push(2);
    delta.extend(std::iter::repeat_n(1, (t - s - 1).max(0) as usize));

    let out = symbol_from(map, sym.m(), i64::from(sym.j()), gamma, delta)?;
    forward_trace(map, sym, out, source, Some(k), None)
}

/// Inverse of [`phi4`], cutting at the minimal k' with
/// delta_{k'} - 1 >= gamma_{k'+1} and gamma_{k'} >= delta_{k'+1} - 1 >= 1,
/// and removing the guard parts 2, 1^... after the last part equal to 2.
pub fn phi4_inv(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Phi4;
    let source = expect_p(map, sym, ClassLabel::P4)?;
    let (g, d) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s1, t1) = (g.len(), d.len());

    let k = (1..=s1 - 1)
        .find(|&k| d.get(k) > g.get(k + 1) && g.get(k) >= d.get(k + 1) - 1 && d.get(k + 1) >= 2)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;
    // Last index with delta = 2 (P4 guarantees a part equal to 2 exists).
    let cut = (1..=t1)
        .rev()
        .find(|&i| d.get(i) == 2)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;

    let mut alpha: Vec<i64> = vec![g.get(1) + 1];
    alpha.extend((2..=k).map(|i| g.get(i)));
    alpha.extend((k + 1..=cut - 1).map(|i| d.get(i) - 1));
    let mut beta: Vec<i64> = (1..=k).map(|i| d.get(i)).collect();
    beta.extend((k + 1..=t1).map(|i| g.get(i) + 1));

    let out = symbol_from(map, sym.m(), i64::from(sym.j()), alpha, beta)?;
    inverse_trace(map, sym, out, source, ClassLabel::Q4, Some(k), None)
}

// ---------------------------------------------------------------------------
// phi5 / psi1: cut at the maximal k <= t-1 with alpha_k - m + 2 >=
// beta_{k+1} - 1 (k >= 2 always), then rebuild both rows over the grown
// rectangle. The same arithmetic serves phi5 (m >= 1, on Q5) and psi1
// (m = 0, on Qbar1, where s(beta) >= 3 keeps the first row positive).

fn phi5_like(sym: &DurfeeSymbol, map: MapName, source_class: ClassLabel) -> Result<MappingTrace, InjectError> {
    let source = expect_q(map, sym, source_class)?;
    let m = i64::from(sym.m());
    let (a, b) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let t = b.len();

    let k = (1..=t - 1)
        .rev()
        .find(|&k| a.get(k) - m + 2 >= b.get(k + 1) - 1)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;
    debug_assert!(k >= 2, "the cut index is at least 2 on {sym}");

    let mut gamma: Vec<i64> = (2..=k).map(|i| b.get(i) + m - 2).collect();
    gamma.extend((k + 1..=t).map(|i| a.get(i) + 1));
    let mut delta: Vec<i64> = vec![a.get(2) + 1 - m];
    delta.extend((3..=k).map(|i| a.get(i) + 2 - m));
    delta.extend((k + 1..=t).map(|i| b.get(i) - 1));

    let out = symbol_from(map, sym.m(), i64::from(sym.j()) + 1, gamma, delta)?;
    forward_trace(map, sym, out, source, Some(k), None)
}

fn tau_like(
    sym: &DurfeeSymbol,
    map: MapName,
    source_class: ClassLabel,
    target_class: ClassLabel,
) -> Result<MappingTrace, InjectError> {
    let source = expect_p(map, sym, source_class)?;
    let m = i64::from(sym.m());
    let j1 = i64::from(sym.j());
    let (g, d) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let t1 = g.len();

    let k = (1..=t1 - 1)
        .rev()
        .find(|&k| g.get(k) - m + 1 >= d.get(k + 1))
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;

    let mut alpha: Vec<i64> = vec![j1 + m - 1, d.get(1) - 1 + m];
    alpha.extend((2..=k).map(|i| d.get(i) - 2 + m));
    alpha.extend((k + 1..=t1).map(|i| g.get(i) - 1));
    let mut beta: Vec<i64> = vec![j1 - 1];
    beta.extend((1..=k).map(|i| g.get(i) + 2 - m));
    beta.extend((k + 1..=t1).map(|i| d.get(i) + 1));

    let out = symbol_from(map, sym.m(), j1 - 1, alpha, beta)?;
    inverse_trace(map, sym, out, source, target_class, Some(k), None)
}

/// Q5 -> P5 for m >= 1. The trace records the maximal cut index k.
pub fn phi5(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    require_offset(MapName::Phi5, sym, false)?;
    phi5_like(sym, MapName::Phi5, ClassLabel::Q5)
}

/// Inverse of [`phi5`] (m >= 1), with k' maximal such that
/// gamma_{k'} - m + 1 >= delta_{k'+1}; on the image, k' = k - 1.
pub fn phi5_inv(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    require_offset(MapName::Phi5, sym, false)?;
    tau_like(sym, MapName::Phi5, ClassLabel::P5, ClassLabel::Q5)
}

/// Qbar1 -> Pbar1 at m = 0: the phi5 construction specialized to offset 0,
/// valid there because s(beta) >= 3.
pub fn psi1(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    require_offset(MapName::Psi1, sym, true)?;
    phi5_like(sym, MapName::Psi1, ClassLabel::QBar1)
}

/// Inverse of [`psi1`].
pub fn psi1_inv(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    require_offset(MapName::Psi1, sym, true)?;
    tau_like(sym, MapName::Psi1, ClassLabel::PBar1, ClassLabel::QBar1)
}

// ---------------------------------------------------------------------------
// phi6 / psi2: cut at the maximal k <= s with alpha_k - m + 1 >= beta_k - 1
// (k >= 3 always). Shared by phi6 (m >= 1, Q6) and psi2 (m = 0, Qbar2).

fn phi6_like(sym: &DurfeeSymbol, map: MapName, source_class: ClassLabel) -> Result<MappingTrace, InjectError> {
    let source = expect_q(map, sym, source_class)?;
    let m = i64::from(sym.m());
    let (a, b) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s, t) = (a.len(), b.len());

    let k = (1..=s)
        .rev()
        .find(|&k| a.get(k) - m + 1 >= b.get(k) - 1)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;
    debug_assert!(k >= 3, "the cut index is at least 3 on {sym}");

    let mut gamma: Vec<i64> = (1..=k - 1).map(|i| b.get(i) + m - 1).collect();
    gamma.extend((k + 1..=s).map(|i| a.get(i) + 1));
    gamma.push(2);
    gamma.extend(std::iter::repeat_n(1, (t - s - 1).max(0) as usize));
    let mut delta: Vec<i64> = (3..=k).map(|i| a.get(i) + 1 - m).collect();
    delta.extend((k..=t).map(|i| b.get(i) - 1));

    let out = symbol_from(map, sym.m(), i64::from(sym.j()) + 1, gamma, delta)?;
    forward_trace(map, sym, out, source, Some(k), None)
}

fn chi_like(
    sym: &DurfeeSymbol,
    map: MapName,
    source_class: ClassLabel,
    target_class: ClassLabel,
) -> Result<MappingTrace, InjectError> {
    let source = expect_p(map, sym, source_class)?;
    let m = i64::from(sym.m());
    let j1 = i64::from(sym.j());
    let (g, d) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let t1 = g.len();

    let k = (1..=t1 - 1)
        .rev()
        .find(|&k| g.get(k) - m >= d.get(k) && g.get(k + 1) >= 2)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;
    // Last index with gamma = 2 (present on every image symbol).
    let cut = (1..=t1)
        .rev()
        .find(|&i| g.get(i) == 2)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;

    let mut alpha: Vec<i64> = vec![j1 + m - 1, j1 + m - 1];
    alpha.extend((1..=k - 1).map(|i| d.get(i) - 1 + m));
    alpha.extend((k + 1..=cut - 1).map(|i| g.get(i) - 1));
    let mut beta: Vec<i64> = (1..=k).map(|i| g.get(i) + 1 - m).collect();
    beta.extend((k..=t1).map(|i| d.get(i) + 1));

    let out = symbol_from(map, sym.m(), j1 - 1, alpha, beta)?;
    inverse_trace(map, sym, out, source, target_class, Some(k), None)
}

/// Q6 -> P6 for m >= 1. The trace records the maximal cut index k.
pub fn phi6(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    require_offset(MapName::Phi6, sym, false)?;
    phi6_like(sym, MapName::Phi6, ClassLabel::Q6)
}

/// Inverse of [`phi6`] (m >= 1), with k' maximal such that
/// gamma_{k'} - m >= delta_{k'} and gamma_{k'+1} >= 2; on the image,
/// k' = k - 1.
pub fn phi6_inv(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    require_offset(MapName::Phi6, sym, false)?;
    chi_like(sym, MapName::Phi6, ClassLabel::P6, ClassLabel::Q6)
}

/// Qbar2 -> Pbar2 at m = 0: the phi6 construction specialized to offset 0,
/// valid there because s(beta) >= 3.
pub fn psi2(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    require_offset(MapName::Psi2, sym, true)?;
    phi6_like(sym, MapName::Psi2, ClassLabel::QBar2)
}

/// Inverse of [`psi2`].
pub fn psi2_inv(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    require_offset(MapName::Psi2, sym, true)?;
    chi_like(sym, MapName::Psi2, ClassLabel::PBar2, ClassLabel::QBar2)
}

// ---------------------------------------------------------------------------
// psi3: Qbar3 -> Pbar3 at m = 0. Both extreme parts leave: alpha loses its
// top part (= j) and its bottom part (= 1), beta loses its top part (= j);
// together with one cell from each remaining beta part they fill the grown
// rectangle, and the second row is padded with 1s.

fn psi3_full(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Psi3;
    require_offset(map, sym, true)?;
    let source = expect_q(map, sym, ClassLabel::QBar3)?;
    let (a, b) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s, t) = (a.len(), b.len());

    let gamma: Vec<i64> = (2..=t).map(|i| b.get(i) - 1).collect();
    let mut delta: Vec<i64> = (2..=s - 1).map(|i| a.get(i) + 1).collect();
    delta.extend(std::iter::repeat_n(1, (t - s + 1).max(0) as usize));

    let out = symbol_from(map, sym.m(), i64::from(sym.j()) + 1, gamma, delta)?;
    forward_trace(map, sym, out, source, None, None)
}

pub fn psi3(sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    psi3_full(sym).map(|t| t.output)
}

/// Inverse of [`psi3`]. The index h' (largest with delta_{h'} > 1) is
/// recorded in the trace's `h` field.
pub fn psi3_inv(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Psi3;
    require_offset(map, sym, true)?;
    let source = expect_p(map, sym, ClassLabel::PBar3)?;
    let j1 = i64::from(sym.j());
    let (g, d) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s1, t1) = (g.len(), d.len());

    let h = (1..=t1)
        .rev()
        .find(|&i| d.get(i) > 1)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;

    let mut alpha: Vec<i64> = vec![j1 - 1];
    alpha.extend((1..=h).map(|i| d.get(i) - 1));
    alpha.push(1);
    let mut beta: Vec<i64> = vec![j1 - 1];
    beta.extend((1..=s1).map(|i| g.get(i) + 1));

    let out = symbol_from(map, sym.m(), j1 - 1, alpha, beta)?;
    inverse_trace(map, sym, out, source, ClassLabel::QBar3, None, Some(h))
}

// ---------------------------------------------------------------------------
// psi4: Qbar4 -> P7 at m = 0, a bijection. The smallest beta part (= 2)
// dissolves into the grown rectangle together with the top parts of both
// rows.

fn psi4_full(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Psi4;
    require_offset(map, sym, true)?;
    let source = expect_q(map, sym, ClassLabel::QBar4)?;
    let (a, b) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s, t) = (a.len(), b.len());

    let mut gamma: Vec<i64> = vec![a.get(2)];
    gamma.extend((3..=t - 1).map(|i| b.get(i) - 1));
    let mut delta: Vec<i64> = vec![b.get(2) + 1];
    delta.extend((3..=s).map(|i| a.get(i) + 1));
    delta.extend(std::iter::repeat_n(1, (t - s - 1).max(0) as usize));

    let out = symbol_from(map, sym.m(), i64::from(sym.j()) + 1, gamma, delta)?;
    forward_trace(map, sym, out, source, None, None)
}

pub fn psi4(sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    psi4_full(sym).map(|t| t.output)
}

fn psi4_inv_full(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Psi4;
    require_offset(map, sym, true)?;
    let source = expect_p(map, sym, ClassLabel::P7)?;
    let j1 = i64::from(sym.j());
    let (g, d) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let t1 = g.len();

    // Delta parts >= 3 came from alpha; parts = 1 were padding. (P7 forbids
    // parts equal to 2, so the split is exact.)
    let mut alpha: Vec<i64> = vec![j1 - 1, j1 - 1];
    alpha.extend((2..=t1).map(|i| d.get(i)).filter(|&p| p >= 3).map(|p| p - 1));
    let mut beta: Vec<i64> = vec![j1 - 1, j1 - 1];
    beta.extend((2..=t1).map(|i| g.get(i) + 1));
    beta.push(2);

    let out = symbol_from(map, sym.m(), j1 - 1, alpha, beta)?;
    inverse_trace(map, sym, out, source, ClassLabel::QBar4, None, None)
}

/// Inverse of [`psi4`]; the pair is a bijection between Qbar4 and P7 at
/// m = 0.
pub fn psi4_inv(sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    psi4_inv_full(sym).map(|t| t.output)
}

// ---------------------------------------------------------------------------
// psi5: Qbar5 -> P8 at m = 0, over the SAME rectangle (the only map that
// keeps j). Cuts: k = maximal index with alpha_k = j, h = minimal index
// with beta_h = 2.

/// Qbar5 -> P8 at m = 0. The trace records both cut indices k and h.
pub fn psi5(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Psi5;
    require_offset(map, sym, true)?;
    let source = expect_q(map, sym, ClassLabel::QBar5)?;
    let j = i64::from(sym.j());
    let (a, b) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let (s, t) = (a.len(), b.len());

    let k = (1..=s)
        .rev()
        .find(|&i| a.get(i) == j)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;
    let h = (1..=t)
        .find(|&i| b.get(i) == 2)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;

    let mut gamma: Vec<i64> = (1..=k).map(|i| a.get(i) - 1).collect();
    gamma.extend((2..=h - 1).map(|i| b.get(i) - 1));
    gamma.push(b.get(h));
    gamma.extend(std::iter::repeat_n(1, (t - h).max(0) as usize));
    let mut delta: Vec<i64> = vec![b.get(1)];
    delta.extend((k + 1..=s).map(|i| a.get(i) + 1));
    delta.extend(std::iter::repeat_n(1, (2 * k - 2 + t - s).max(0) as usize));

    let out = symbol_from(map, sym.m(), j, gamma, delta)?;
    forward_trace(map, sym, out, source, Some(k), Some(h))
}

/// Inverse of [`psi5`]. Reads k' = the number of gamma parts equal to
/// j' - 1 and h' = the largest index with gamma_{h'} = 2, then splits into
/// the generic case j' >= 4 and the degenerate case j' = 3 (where every
/// non-rectangle cell is forced and only part counts matter).
pub fn psi5_inv(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    let map = MapName::Psi5;
    require_offset(map, sym, true)?;
    let source = expect_p(map, sym, ClassLabel::P8)?;
    let j1 = i64::from(sym.j());
    let (g, d) = (Row::of(sym.alpha()), Row::of(sym.beta()));
    let t1 = g.len();

    let outside = || InjectError::OutsideImage {
        map,
        symbol: sym.clone(),
    };

    let k = (1..=t1).filter(|&i| g.get(i) == j1 - 1).count() as i64;
    let h = (1..=t1)
        .rev()
        .find(|&i| g.get(i) == 2)
        .ok_or_else(|| InjectError::NoAuxiliaryIndex {
            map,
            symbol: sym.clone(),
        })?;
    if k == 0 {
        return Err(outside());
    }

    let (alpha, beta) = if j1 >= 4 {
        let mut alpha: Vec<i64> = (1..=k).map(|i| g.get(i) + 1).collect();
        alpha.extend((2..=t1).map(|i| d.get(i) - 1));
        let mut beta: Vec<i64> = vec![d.get(1)];
        beta.extend((k + 1..=h - 1).map(|i| g.get(i) + 1));
        beta.push(g.get(h));
        beta.extend((h + 1..=t1).map(|i| g.get(i) + 1));
        (alpha, beta)
    } else {
        // j' = 3: gamma has only parts 2 and 1, so k' counts the 2s and
        // coincides with h'.
        debug_assert_eq!(k, h, "for j' = 3 the two indices coincide on {sym}");
        let ones = (1..=g.len().max(d.len()))
            .filter(|&i| d.get(i) == 1)
            .count() as i64;
        let twos_alpha = t1 - ones - 1;
        if twos_alpha < 0 {
            return Err(outside());
        }
        let mut alpha: Vec<i64> = vec![3; (k - 1) as usize];
        alpha.extend(std::iter::repeat_n(2, twos_alpha as usize));
        let mut beta: Vec<i64> = vec![3];
        beta.extend(std::iter::repeat_n(2, (t1 - k + 1).max(0) as usize));
        (alpha, beta)
    };

    let out = symbol_from(map, sym.m(), j1, alpha, beta)?;
    inverse_trace(map, sym, out, source, ClassLabel::QBar5, Some(k), Some(h))
}

// ---------------------------------------------------------------------------
// The combined injection.

/// The combined weight-preserving injection from Q(m,n) into P(-m,n),
/// dispatching on the symbol's Q-class. The offset m rides on the symbol.
///
/// For m >= 1 this applies phi1..phi6 on Q1..Q6; for m = 0 it applies
/// phi1..phi4 on Q1..Q4 and psi1..psi5 on Qbar1..Qbar5.
pub fn phi(sym: &DurfeeSymbol) -> Result<MappingTrace, InjectError> {
    use ClassLabel::*;
    match classify_q(sym)? {
        Q1 => phi1_full(sym),
        Q2 => phi2_full(sym),
        Q3 => phi3_full(sym),
        Q4 => phi4(sym),
        Q5 => phi5(sym),
        Q6 => phi6(sym),
        QBar1 => psi1(sym),
        QBar2 => psi2(sym),
        QBar3 => psi3_full(sym),
        QBar4 => psi4_full(sym),
        QBar5 => psi5(sym),
        other => unreachable!("classify_q returned a P-side label {other}"),
    }
}

/// Apply the inverse of the named map, returning just the recovered symbol.
/// For `Phi1` this is the identity on P1.
pub fn apply_inverse(map: MapName, sym: &DurfeeSymbol) -> Result<DurfeeSymbol, InjectError> {
    use MapName::*;
    match map {
        Phi1 => {
            expect_p(Phi1, sym, ClassLabel::P1)?;
            Ok(sym.clone())
        }
        Phi2 => phi2_inv(sym),
        Phi3 => phi3_inv(sym),
        Phi4 => phi4_inv(sym).map(|t| t.output),
        Phi5 => phi5_inv(sym).map(|t| t.output),
        Phi6 => phi6_inv(sym).map(|t| t.output),
        Psi1 => psi1_inv(sym).map(|t| t.output),
        Psi2 => psi2_inv(sym).map(|t| t.output),
        Psi3 => psi3_inv(sym).map(|t| t.output),
        Psi4 => psi4_inv(sym),
        Psi5 => psi5_inv(sym).map(|t| t.output),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::in_q;
    use crate::durfee::to_symbol;
    use crate::partition::enumerate_partitions;

    fn sym(m: u32, j: u32, alpha: &[Part], beta: &[Part]) -> DurfeeSymbol {
        DurfeeSymbol::new(
            m,
            j,
            Partition::new(alpha.to_vec()).unwrap(),
            Partition::new(beta.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn phi1_is_identity() {
        let s = to_symbol(&Partition::new(vec![4]).unwrap(), 1);
        assert_eq!(phi1(&s).unwrap(), s);
        let empty = to_symbol(&Partition::empty(), 3);
        assert_eq!(phi1(&empty).unwrap(), empty);
    }

    #[test]
    fn phi2_golden_n31() {
        let input = sym(2, 3, &[4, 2, 2], &[3, 2, 2, 1]);
        assert_eq!(input.weight(), 31);
        let expected = sym(2, 3, &[5, 3, 3, 1], &[2, 1, 1]);
        assert_eq!(phi2(&input).unwrap(), expected);
        assert_eq!(phi2_inv(&expected).unwrap(), input);
    }

    #[test]
    fn phi2_inverse_rejects_excluded_symbol() {
        // (empty, empty) over the 3 x 1 rectangle is in P2(-2,3) but has no
        // preimage under phi2.
        let excluded = sym(2, 1, &[], &[]);
        assert!(matches!(
            phi2_inv(&excluded),
            Err(InjectError::OutsideImage { .. })
        ));
    }

    #[test]
    fn phi3_golden_n34() {
        let input = sym(2, 3, &[5, 4, 1], &[3, 3, 2, 1]);
        assert_eq!(input.weight(), 34);
        let expected = sym(2, 4, &[5, 2], &[2, 1]);
        assert_eq!(phi3(&input).unwrap(), expected);
        assert_eq!(phi3_inv(&expected).unwrap(), input);
    }

    #[test]
    fn phi4_golden_n41() {
        let input = sym(2, 3, &[5, 4, 2, 1], &[3, 3, 2, 2, 2, 2]);
        assert_eq!(input.weight(), 41);
        let trace = phi4(&input).unwrap();
        assert_eq!(trace.k, Some(2));
        assert_eq!(trace.output, sym(2, 3, &[4, 4, 1, 1, 1, 1], &[3, 3, 3, 2, 2, 1]));
        let back = phi4_inv(&trace.output).unwrap();
        assert_eq!(back.k, Some(2));
        assert_eq!(back.output, input);
    }

    #[test]
    fn phi5_golden_n34() {
        let input = sym(1, 3, &[4, 4, 2], &[3, 3, 2, 2, 2]);
        assert_eq!(input.weight(), 34);
        let trace = phi5(&input).unwrap();
        assert_eq!(trace.k, Some(4));
        assert_eq!(trace.output, sym(1, 4, &[2, 1, 1, 1], &[4, 3, 1, 1]));
        let back = phi5_inv(&trace.output).unwrap();
        assert_eq!(back.k, Some(3));
        assert_eq!(back.output, input);
    }

    #[test]
    fn phi6_golden_n60() {
        let input = sym(2, 3, &[5, 5, 5, 5, 3, 2], &[3, 3, 3, 3, 2, 2, 2, 2]);
        assert_eq!(input.weight(), 60);
        let trace = phi6(&input).unwrap();
        assert_eq!(trace.k, Some(6));
        assert_eq!(
            trace.output,
            sym(2, 4, &[4, 4, 4, 4, 3, 2, 1], &[4, 4, 2, 1, 1, 1, 1])
        );
        let back = phi6_inv(&trace.output).unwrap();
        assert_eq!(back.k, Some(5));
        assert_eq!(back.output, input);
    }

    #[test]
    fn psi3_golden_n35() {
        let input = sym(0, 3, &[3, 3, 2, 2, 1], &[3, 3, 3, 2, 2, 2]);
        assert_eq!(input.weight(), 35);
        let expected = sym(0, 4, &[2, 2, 1, 1, 1], &[4, 3, 3, 1, 1]);
        assert_eq!(psi3(&input).unwrap(), expected);
        let back = psi3_inv(&expected).unwrap();
        assert_eq!(back.h, Some(3));
        assert_eq!(back.output, input);
    }

    #[test]
    fn psi4_golden_n40() {
        let input = sym(0, 3, &[3, 3, 3, 2, 2], &[3, 3, 3, 3, 2, 2, 2]);
        assert_eq!(input.weight(), 40);
        let expected = sym(0, 4, &[3, 2, 2, 1, 1], &[4, 4, 3, 3, 1]);
        assert_eq!(psi4(&input).unwrap(), expected);
        assert_eq!(psi4_inv(&expected).unwrap(), input);
    }

    #[test]
    fn psi5_golden_n51() {
        let input = sym(0, 4, &[4, 4, 4, 2, 2], &[4, 3, 3, 3, 2, 2, 2]);
        assert_eq!(input.weight(), 51);
        let trace = psi5(&input).unwrap();
        assert_eq!((trace.k, trace.h), (Some(3), Some(5)));
        assert_eq!(
            trace.output,
            sym(0, 4, &[3, 3, 3, 2, 2, 2, 2, 1, 1], &[4, 3, 3, 1, 1, 1, 1, 1, 1])
        );
        let back = psi5_inv(&trace.output).unwrap();
        assert_eq!((back.k, back.h), (Some(3), Some(7)));
        assert_eq!(back.output, input);
    }

    #[test]
    fn psi5_inverse_degenerate_rectangle() {
        // j = 3 forces both rows of the image into parts 2 and 1 only; the
        // inverse then reconstructs the source from part counts alone.
        let input = sym(0, 3, &[3, 3, 2], &[3, 2, 2, 2]);
        assert_eq!(input.weight(), 26);
        let trace = psi5(&input).unwrap();
        assert_eq!(trace.output, sym(0, 3, &[2, 2, 2, 1, 1], &[3, 3, 1, 1, 1]));
        let back = psi5_inv(&trace.output).unwrap();
        assert_eq!(back.output, input);
    }

    #[test]
    fn wrong_class_and_offset_are_rejected() {
        let q2 = sym(2, 3, &[4, 2, 2], &[3, 2, 2, 1]);
        assert!(matches!(phi3(&q2), Err(InjectError::WrongClass { .. })));
        let q5_m0 = sym(0, 3, &[3, 3, 2, 2, 1], &[3, 3, 3, 2, 2, 2]);
        assert!(matches!(phi5(&q5_m0), Err(InjectError::WrongOffset { .. })));
        let not_in_q = to_symbol(&Partition::new(vec![2, 2, 2, 1, 1]).unwrap(), 1);
        assert!(matches!(phi(&not_in_q), Err(InjectError::Classify(_))));
    }

    #[test]
    fn combined_map_round_trips_small_range() {
        // For every partition with m in its rank-set: the dispatcher picks
        // the routed class pair, preserves weight, and the matching inverse
        // recovers the input. Larger sweeps live in the verification suite.
        for n in 0..=18u32 {
            for m in 0..=4u32 {
                let mut images = Vec::new();
                for lambda in enumerate_partitions(n) {
                    let s = to_symbol(&lambda, m);
                    if !in_q(&s) {
                        continue;
                    }
                    let trace = phi(&s).unwrap();
                    assert_eq!(trace.output.weight(), u64::from(n));
                    assert_eq!(trace.source_class.route(), Some(trace.target_class));
                    assert_eq!(apply_inverse(trace.map, &trace.output).unwrap(), s);
                    images.push(trace.output.to_partition());
                }
                let total = images.len();
                images.sort();
                images.dedup();
                assert_eq!(images.len(), total, "phi not injective at m={m}, n={n}");
            }
        }
    }
}
