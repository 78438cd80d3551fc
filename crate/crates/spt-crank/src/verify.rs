//! Exhaustive finite verification suites with machine-readable reports.
//!
//! Every suite checks a family of exact statements over an explicit finite
//! parameter range and returns a [`VerificationReport`]:
//!
//! * the **claims** record, as data, exactly which statement was checked on
//!   which `(m, n)` (or `(k, n)`) lattice — nothing outside a claim's range
//!   was tested;
//! * the **counterexamples** carry the parameters and a witness payload for
//!   every violation found, in the canonical enumeration order (outer
//!   parameter ascending, then inner), truncated after
//!   [`MAX_COUNTEREXAMPLES`] entries;
//! * the status is `fail` exactly when the counterexample list is nonempty.
//!
//! All arithmetic is exact; a value that would leave the `i64` range is
//! reported as a counterexample (the claim could not be verified there), not
//! silently wrapped.  Suites parallelize over `n` and merge results in
//! ascending order, so reports are byte-identical across runs and thread
//! counts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify_p, p_symbols, q_symbols, ClassLabel};
use crate::durfee::DurfeeSymbol;
use crate::inject::{
    apply_inverse, phi, phi2, phi2_inv, phi3, phi3_inv, phi4_inv, phi5_inv, phi6_inv, psi1_inv,
    psi2_inv, psi4, psi4_inv, psi5_inv, MapName, MappingTrace,
};
use crate::spt::{n_s_row, spt};
use crate::stats::{p_signed, q_row, CrankConvention, RankCrankTable};

/// Upper bound on counterexamples retained per report; earlier (smaller
/// parameter) violations are kept and a truncation note is added.
pub const MAX_COUNTEREXAMPLES: usize = 25;

/// Largest `n` for which suites enumerate S-partitions; beyond this the
/// triple count makes exhaustive checks impractical, so S-dependent claims
/// cap their range here and say so in the claim lattice.
pub const S_PARTITION_CEILING: u32 = 26;

/// Largest `(n, m)` sweep the combined suite will run for the injection
/// check; single cells beyond this remain available directly.
const SWEEP_N_CEILING: u32 = 30;
const SWEEP_M_CEILING: u32 = 8;

/// Outcome of a verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Every checked instance of every claim held.
    Pass,
    /// At least one counterexample was found.
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
        }
    }
}

/// A single verified statement together with the exact parameter range it
/// was checked on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    /// What was checked, in formula form.
    pub name: String,
    /// The finite lattice of parameters the check ran over.
    pub lattice: String,
}

impl Claim {
    fn new(name: impl Into<String>, lattice: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            lattice: lattice.into(),
        }
    }
}

/// A violated claim instance: where it failed and what was observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Name of the violated claim.
    pub claim: String,
    /// Parameter values at the failure, keyed by parameter name.
    pub location: BTreeMap<String, i64>,
    /// Witness payload: the values, partitions, symbols or traces involved.
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let loc: Vec<String> = self
            .location
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "[{}] at {}: {}", self.claim, loc.join(", "), self.detail)
    }
}

/// Parallel map over `lo..=hi`, preserving ascending order in the result
/// (slice iterators are indexed, so `collect` keeps encounter order).
fn par_map_range<T: Send, F: Fn(u32) -> T + Sync>(lo: u32, hi: u32, f: F) -> Vec<T> {
    let values: Vec<u32> = (lo..=hi).collect();
    values.par_iter().map(|&n| f(n)).collect()
}

fn cx(claim: &str, location: &[(&str, i64)], detail: String) -> Counterexample {
    Counterexample {
        claim: claim.to_string(),
        location: location
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect(),
        detail,
    }
}

/// Result of one verification suite: claims checked, status, and evidence.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    check: String,
    status: Status,
    claims: Vec<Claim>,
    counterexamples: Vec<Counterexample>,
    observations: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    traces: Vec<MappingTrace>,
    #[serde(skip)]
    elapsed: Duration,
}

impl VerificationReport {
    fn finish(
        check: &str,
        claims: Vec<Claim>,
        mut counterexamples: Vec<Counterexample>,
        mut observations: Vec<String>,
        traces: Vec<MappingTrace>,
        started: Instant,
    ) -> Self {
        let total = counterexamples.len();
        if total > MAX_COUNTEREXAMPLES {
            counterexamples.truncate(MAX_COUNTEREXAMPLES);
            observations.push(format!(
                "counterexample list truncated to {MAX_COUNTEREXAMPLES} of {total}"
            ));
        }
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            check: check.to_string(),
            status,
            claims,
            counterexamples,
            observations,
            traces,
            elapsed: started.elapsed(),
        }
    }

    /// Name of the suite that produced this report.
    pub fn check(&self) -> &str {
        &self.check
    }

    /// Pass/fail status; `fail` exactly when counterexamples exist.
    pub fn status(&self) -> Status {
        self.status
    }

    /// True when every checked instance held.
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The statements checked, with their parameter lattices.
    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    /// Violations found, in canonical parameter order (possibly truncated).
    pub fn counterexamples(&self) -> &[Counterexample] {
        &self.counterexamples
    }

    /// Non-failure findings worth surfacing (equality cells, truncation).
    pub fn observations(&self) -> &[String] {
        &self.observations
    }

    /// Full mapping traces, populated only when detail was requested.
    pub fn traces(&self) -> &[MappingTrace] {
        &self.traces
    }

    /// Wall-clock time the suite took (not serialized).
    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {}",
            self.status.to_string().to_uppercase(),
            self.check
        )?;
        for claim in &self.claims {
            writeln!(f, "  claim  {}  on  {}", claim.name, claim.lattice)?;
        }
        for c in &self.counterexamples {
            writeln!(f, "  counterexample  {c}")?;
        }
        for note in &self.observations {
            writeln!(f, "  note   {note}")?;
        }
        for trace in &self.traces {
            writeln!(f, "  trace  {trace}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Rank/crank counting inequalities.

/// Checks the two counting inequalities on `0 <= m <= max_m`:
/// `q(m, n) <= p(-m, n)` for `1 <= n <= max_n`, and
/// `#{rank <= m} >= #{crank <= m}` for `0 <= n <= max_n` (the crank table at
/// `n = 1` is the adjusted one).  Equality cells of the first inequality are
/// reported as an observation.
pub fn verify_conjecture(max_n: u32, max_m: u32) -> VerificationReport {
    let started = Instant::now();
    struct PerN {
        counterexamples: Vec<Counterexample>,
        equality_cells: Vec<(u32, u32)>,
    }

    let per_n: Vec<PerN> = par_map_range(0, max_n, |n| {
            let mut counterexamples = Vec::new();
            let mut equality_cells = Vec::new();
            let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
            let p_n = p_signed(n);
            if n >= 1 {
                let qrow = q_row(n, max_m);
                for m in 0..=max_m {
                    let q = qrow[m as usize] as i64;
                    // p(-m, n) = #{rank >= -m} read off the rank table.
                    let p = p_n - table.rank_at_most(-i64::from(m) - 1);
                    if q > p {
                        counterexamples.push(cx(
                            "q(m, n) <= p(-m, n)",
                            &[("m", i64::from(m)), ("n", i64::from(n))],
                            format!("q = {q} exceeds p = {p}"),
                        ));
                    } else if q == p {
                        equality_cells.push((m, n));
                    }
                }
            }
            for m in 0..=max_m {
                let n_le = table.n_leq(m);
                let m_le = table.m_leq(m);
                if n_le < m_le {
                    counterexamples.push(cx(
                        "#{|rank| <= m} >= #{|crank| <= m}",
                        &[("m", i64::from(m)), ("n", i64::from(n))],
                        format!("rank count {n_le} is below crank count {m_le}"),
                    ));
                }
            }
            PerN {
                counterexamples,
                equality_cells,
            }
        });

    let mut counterexamples = Vec::new();
    let mut equality_cells = Vec::new();
    for mut item in per_n {
        counterexamples.append(&mut item.counterexamples);
        equality_cells.extend(item.equality_cells);
    }

    let mut observations = Vec::new();
    if !equality_cells.is_empty() {
        let shown: Vec<String> = equality_cells
            .iter()
            .take(10)
            .map(|(m, n)| format!("(m={m}, n={n})"))
            .collect();
        observations.push(format!(
            "q(m, n) = p(-m, n) at {} cells; first: {}",
            equality_cells.len(),
            shown.join(", ")
        ));
    }

    let claims = vec![
        Claim::new(
            "q(m, n) <= p(-m, n)",
            format!("1 <= n <= {max_n}, 0 <= m <= {max_m}"),
        ),
        Claim::new(
            "#{|rank| <= m} >= #{|crank| <= m}",
            format!("0 <= n <= {max_n}, 0 <= m <= {max_m} (adjusted crank table at n = 1)"),
        ),
    ];
    VerificationReport::finish(
        "conjecture",
        claims,
        counterexamples,
        observations,
        Vec::new(),
        started,
    )
}

// ---------------------------------------------------------------------------
// The combined injection.

/// Per-cell injection checks shared by the single-cell and sweep suites.
fn injection_cell(
    m: u32,
    n: u32,
    want_traces: bool,
) -> (Vec<Counterexample>, Vec<MappingTrace>, usize) {
    let mut counterexamples = Vec::new();
    let mut traces = Vec::new();
    let loc: Vec<(&str, i64)> = vec![("m", i64::from(m)), ("n", i64::from(n))];

    let sources = q_symbols(m, n);
    let targets = p_symbols(m, n);
    let mut outputs: Vec<(DurfeeSymbol, usize)> = Vec::with_capacity(sources.len());

    for (idx, sym) in sources.iter().enumerate() {
        let trace = match phi(sym) {
            Ok(trace) => trace,
            Err(err) => {
                counterexamples.push(cx(
                    "combined map is total on Q(m, n)",
                    &loc,
                    format!("{sym} was rejected: {err}"),
                ));
                continue;
            }
        };
        if trace.output.weight() != sym.weight() {
            counterexamples.push(cx(
                "weight is preserved",
                &loc,
                format!(
                    "{sym} of weight {} mapped to {} of weight {}",
                    sym.weight(),
                    trace.output,
                    trace.output.weight()
                ),
            ));
        }
        match classify_p(&trace.output) {
            Err(err) => counterexamples.push(cx(
                "image lies in P(-m, n)",
                &loc,
                format!("{} maps {sym} to {}: {err}", trace.map, trace.output),
            )),
            Ok(found) => {
                let routed = trace.source_class.route();
                if routed != Some(found) || trace.target_class != found {
                    counterexamples.push(cx(
                        "each source class lands in its routed target class",
                        &loc,
                        format!(
                            "{sym} in {} mapped into {found}, expected {routed:?}",
                            trace.source_class
                        ),
                    ));
                }
            }
        }
        match apply_inverse(trace.map, &trace.output) {
            Ok(back) if back == *sym => {}
            Ok(back) => counterexamples.push(cx(
                "the inverse returns the source",
                &loc,
                format!("{} round-trips {sym} to {back}", trace.map),
            )),
            Err(err) => counterexamples.push(cx(
                "the inverse returns the source",
                &loc,
                format!("{} image {} rejected by inverse: {err}", trace.map, trace.output),
            )),
        }
        if let Some(mismatch) = aux_index_mismatch(sym, &trace) {
            counterexamples.push(cx(
                "auxiliary indices satisfy the shift relations",
                &loc,
                mismatch,
            ));
        }
        outputs.push((trace.output.clone(), idx));
        if want_traces {
            traces.push(trace);
        }
    }

    // Pairwise distinct outputs: sort and scan neighbours.
    let mut sorted = outputs;
    sorted.sort();
    for pair in sorted.windows(2) {
        if pair[0].0 == pair[1].0 {
            counterexamples.push(cx(
                "outputs are pairwise distinct",
                &loc,
                format!(
                    "{} and {} both map to {}",
                    sources[pair[0].1], sources[pair[1].1], pair[0].0
                ),
            ));
        }
    }

    // Q1(m, n) and P1(-m, n) coincide as sets (the identity piece).
    let q1: BTreeSet<&DurfeeSymbol> = sources
        .iter()
        .filter(|s| matches!(crate::classify::classify_q(s), Ok(ClassLabel::Q1)))
        .collect();
    let p1: BTreeSet<&DurfeeSymbol> = targets
        .iter()
        .filter(|s| matches!(classify_p(s), Ok(ClassLabel::P1)))
        .collect();
    if q1 != p1 {
        let only_q: Vec<String> = q1.difference(&p1).map(|s| s.to_string()).collect();
        let only_p: Vec<String> = p1.difference(&q1).map(|s| s.to_string()).collect();
        counterexamples.push(cx(
            "Q1(m, n) = P1(-m, n) as sets",
            &loc,
            format!("only in Q1: [{}]; only in P1: [{}]", only_q.join(", "), only_p.join(", ")),
        ));
    }

    // The second map covers P2 exactly, minus the width-one empty symbol.
    for target in targets.iter().filter(|s| matches!(classify_p(s), Ok(ClassLabel::P2))) {
        let excluded = target.j() == 1 && target.alpha().is_empty() && target.beta().is_empty();
        match phi2_inv(target) {
            Ok(_) if excluded => counterexamples.push(cx(
                "the width-one empty symbol is outside the second map's image",
                &loc,
                format!("{target} unexpectedly inverted"),
            )),
            Ok(pre) => match phi2(&pre) {
                Ok(image) if image == *target => {}
                Ok(image) => counterexamples.push(cx(
                    "the second map covers P2 minus the width-one empty symbol",
                    &loc,
                    format!("inverse of {target} gives {pre}, which maps to {image}"),
                )),
                Err(err) => counterexamples.push(cx(
                    "the second map covers P2 minus the width-one empty symbol",
                    &loc,
                    format!("inverse of {target} gives {pre}, rejected forward: {err}"),
                )),
            },
            Err(_) if excluded => {}
            Err(err) => counterexamples.push(cx(
                "the second map covers P2 minus the width-one empty symbol",
                &loc,
                format!("{target} rejected by the inverse: {err}"),
            )),
        }
    }

    // The third map is onto P3: its derived inverse is total there.
    for target in targets.iter().filter(|s| matches!(classify_p(s), Ok(ClassLabel::P3))) {
        match phi3_inv(target).and_then(|pre| phi3(&pre).map(|img| (pre, img))) {
            Ok((_, image)) if image == *target => {}
            Ok((pre, image)) => counterexamples.push(cx(
                "the third map covers P3",
                &loc,
                format!("inverse of {target} gives {pre}, which maps to {image}"),
            )),
            Err(err) => counterexamples.push(cx(
                "the third map covers P3",
                &loc,
                format!("{target} rejected: {err}"),
            )),
        }
    }

    // At offset zero the fourth auxiliary map is onto P7.
    if m == 0 {
        for target in targets.iter().filter(|s| matches!(classify_p(s), Ok(ClassLabel::P7))) {
            match psi4_inv(target).and_then(|pre| psi4(&pre).map(|img| (pre, img))) {
                Ok((_, image)) if image == *target => {}
                Ok((pre, image)) => counterexamples.push(cx(
                    "the fourth zero-offset map covers P7",
                    &loc,
                    format!("inverse of {target} gives {pre}, which maps to {image}"),
                )),
                Err(err) => counterexamples.push(cx(
                    "the fourth zero-offset map covers P7",
                    &loc,
                    format!("{target} rejected: {err}"),
                )),
            }
        }
    }

    (counterexamples, traces, sources.len())
}

/// Cross-checks the auxiliary cut indices recorded by a forward map against
/// the indices its inverse reads back from the image:
///
/// * same-rectangle cut: unchanged (`k' = k`);
/// * rectangle-growing cuts: shifted down by one (`k' = k - 1`);
/// * the two-index map: `h' = k + h - 1`, and `k' = k` except in the width-3
///   degenerate case, where `k' = k + 1`.
fn aux_index_mismatch(input: &DurfeeSymbol, trace: &MappingTrace) -> Option<String> {
    use MapName::*;
    let inverse = match trace.map {
        Phi4 => phi4_inv(&trace.output),
        Phi5 => phi5_inv(&trace.output),
        Phi6 => phi6_inv(&trace.output),
        Psi1 => psi1_inv(&trace.output),
        Psi2 => psi2_inv(&trace.output),
        Psi5 => psi5_inv(&trace.output),
        _ => return None,
    };
    let inverse = match inverse {
        Ok(t) => t,
        Err(err) => return Some(format!("inverse of {} rejected {}: {err}", trace.map, trace.output)),
    };
    let expected_k = match trace.map {
        Phi4 => trace.k,
        Phi5 | Phi6 | Psi1 | Psi2 => trace.k.map(|k| k - 1),
        Psi5 => trace.k.map(|k| if input.j() == 3 { k + 1 } else { k }),
        _ => unreachable!("only index-carrying maps reach here"),
    };
    if inverse.k != expected_k {
        return Some(format!(
            "{} on {input}: inverse index k' = {:?}, expected {:?}",
            trace.map, inverse.k, expected_k
        ));
    }
    if trace.map == Psi5 {
        let expected_h = match (trace.k, trace.h) {
            (Some(k), Some(h)) => Some(k + h - 1),
            _ => None,
        };
        if inverse.h != expected_h {
            return Some(format!(
                "{} on {input}: inverse index h' = {:?}, expected {:?}",
                trace.map, inverse.h, expected_h
            ));
        }
    }
    None
}

fn injection_claims(lattice: String) -> Vec<Claim> {
    [
        "combined map is total on Q(m, n)",
        "weight is preserved",
        "image lies in P(-m, n)",
        "each source class lands in its routed target class",
        "the inverse returns the source",
        "auxiliary indices satisfy the shift relations",
        "outputs are pairwise distinct",
        "Q1(m, n) = P1(-m, n) as sets",
        "the second map covers P2 minus the width-one empty symbol",
        "the third map covers P3",
        "the fourth zero-offset map covers P7",
    ]
    .into_iter()
    .map(|name| Claim::new(name, lattice.clone()))
    .collect()
}

/// Verifies the combined injection on the single cell `(m, n)`.  With
/// `detail` set, the report carries the full mapping trace of every source
/// symbol.
pub fn verify_injection(m: u32, n: u32, detail: bool) -> VerificationReport {
    let started = Instant::now();
    let (counterexamples, traces, checked) = injection_cell(m, n, detail);
    let observations = vec![format!("{checked} source symbols checked")];
    VerificationReport::finish(
        "injection",
        injection_claims(format!("m = {m}, n = {n}")),
        counterexamples,
        observations,
        traces,
        started,
    )
}

/// Verifies the combined injection on the full sweep `1 <= n <= max_n`,
/// `0 <= m <= max_m`, without traces.
pub fn verify_injection_sweep(max_n: u32, max_m: u32) -> VerificationReport {
    let started = Instant::now();
    let per_n: Vec<(Vec<Counterexample>, usize)> = par_map_range(1, max_n, |n| {
        let mut counterexamples = Vec::new();
        let mut checked = 0usize;
        for m in 0..=max_m {
            let (mut cell_cx, _, cell_checked) = injection_cell(m, n, false);
            counterexamples.append(&mut cell_cx);
            checked += cell_checked;
        }
        (counterexamples, checked)
    });

    let mut counterexamples = Vec::new();
    let mut checked = 0usize;
    for (mut cell_cx, cell_checked) in per_n {
        counterexamples.append(&mut cell_cx);
        checked += cell_checked;
    }
    let observations = vec![format!("{checked} source symbols checked")];
    VerificationReport::finish(
        "injection",
        injection_claims(format!("1 <= n <= {max_n}, 0 <= m <= {max_m}")),
        counterexamples,
        observations,
        Vec::new(),
        started,
    )
}

// ---------------------------------------------------------------------------
// Counting identities.

/// Checks the exact counting identities linking rank counts, crank counts,
/// `q(m, n)` and `p(-m, n)`, plus the two symmetries, each on its own
/// validity range (see the claim lattices).
pub fn verify_identities(max_n: u32) -> VerificationReport {
    let started = Instant::now();
    let per_n: Vec<Vec<Counterexample>> = par_map_range(0, max_n, |n| {
            let mut out = Vec::new();
            let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
            let p_n = p_signed(n);
            let loc = |m: i64| {
                BTreeMap::from([("m".to_string(), m), ("n".to_string(), i64::from(n))])
            };
            let push = |out: &mut Vec<Counterexample>, claim: &str, m: i64, detail: String| {
                out.push(Counterexample {
                    claim: claim.to_string(),
                    location: loc(m),
                    detail,
                });
            };

            // Totals: both columns of the table sum to p(n).
            let rank_total: i64 = table.rank_counts().values().sum();
            let crank_total: i64 = table.crank_counts().values().sum();
            if rank_total != p_n || crank_total != p_n {
                push(
                    &mut out,
                    "rank and crank tables each total p(n)",
                    0,
                    format!("rank total {rank_total}, crank total {crank_total}, p(n) = {p_n}"),
                );
            }

            let qrow = if n >= 1 { q_row(n, n) } else { Vec::new() };
            for m in 0..=n {
                let mi = i64::from(m);
                let p_neg_m = p_n - table.rank_at_most(-mi - 1);
                if n >= 1 {
                    let lhs = table.n_leq(m);
                    let rhs = 2 * p_neg_m - p_n;
                    if lhs != rhs {
                        push(
                            &mut out,
                            "#{|rank| <= m} = 2 p(-m, n) - p(n)",
                            mi,
                            format!("band count {lhs}, formula {rhs}"),
                        );
                    }
                }
                if n >= 2 {
                    let q = qrow[m as usize] as i64;
                    let m_le = table.m_leq(m);
                    if m_le != 2 * q - p_n {
                        push(
                            &mut out,
                            "#{|crank| <= m} = 2 q(m, n) - p(n)",
                            mi,
                            format!("band count {m_le}, formula {}", 2 * q - p_n),
                        );
                    }
                    let gap = table.n_leq(m) - m_le;
                    if gap != 2 * (p_neg_m - q) {
                        push(
                            &mut out,
                            "#{|rank| <= m} - #{|crank| <= m} = 2 (p(-m, n) - q(m, n))",
                            mi,
                            format!("gap {gap}, formula {}", 2 * (p_neg_m - q)),
                        );
                    }
                    let one_sided = table.crank_at_most(mi);
                    if one_sided != q {
                        push(
                            &mut out,
                            "#{crank <= m} = q(m, n)",
                            mi,
                            format!("crank count {one_sided}, q = {q}"),
                        );
                    }
                }
                if m >= 1 {
                    let (plus, minus) = (table.rank_count(mi), table.rank_count(-mi));
                    if plus != minus {
                        push(
                            &mut out,
                            "N(m, n) = N(-m, n)",
                            mi,
                            format!("N({mi}, {n}) = {plus}, N({}, {n}) = {minus}", -mi),
                        );
                    }
                    if n >= 2 {
                        let (plus, minus) = (table.crank_count(mi), table.crank_count(-mi));
                        if plus != minus {
                            push(
                                &mut out,
                                "M(m, n) = M(-m, n)",
                                mi,
                                format!("M({mi}, {n}) = {plus}, M({}, {n}) = {minus}", -mi),
                            );
                        }
                    }
                }
            }
            out
        });

    let counterexamples = per_n.into_iter().flatten().collect();
    let claims = vec![
        Claim::new(
            "rank and crank tables each total p(n)",
            format!("0 <= n <= {max_n}"),
        ),
        Claim::new(
            "#{|rank| <= m} = 2 p(-m, n) - p(n)",
            format!("1 <= n <= {max_n}, 0 <= m <= n"),
        ),
        Claim::new(
            "#{|crank| <= m} = 2 q(m, n) - p(n)",
            format!("2 <= n <= {max_n}, 0 <= m <= n"),
        ),
        Claim::new(
            "#{|rank| <= m} - #{|crank| <= m} = 2 (p(-m, n) - q(m, n))",
            format!("2 <= n <= {max_n}, 0 <= m <= n"),
        ),
        Claim::new(
            "#{crank <= m} = q(m, n)",
            format!("2 <= n <= {max_n}, 0 <= m <= n"),
        ),
        Claim::new("N(m, n) = N(-m, n)", format!("0 <= n <= {max_n}, 1 <= m <= n")),
        Claim::new("M(m, n) = M(-m, n)", format!("2 <= n <= {max_n}, 1 <= m <= n")),
    ];
    VerificationReport::finish(
        "identities",
        claims,
        counterexamples,
        Vec::new(),
        Vec::new(),
        started,
    )
}

// ---------------------------------------------------------------------------
// Moment identities and inequalities.

/// `m^k - (m-1)^k` in checked arithmetic.
fn pow_gap(m: u32, k: u32) -> Option<i64> {
    let hi = i64::from(m).checked_pow(k)?;
    let lo = i64::from(m - 1).checked_pow(k)?;
    hi.checked_sub(lo)
}

/// Checks the moment truncation formulas, the strict positive-moment
/// inequality, the even ordinary-moment inequality, and the vanishing of odd
/// ordinary moments, for `1 <= k <= max_k` on `1 <= n <= max_n`.
///
/// Arithmetic that would leave the `i64` range is reported as a
/// counterexample: the claim could not be verified at that cell.
pub fn verify_moments(max_k: u32, max_n: u32) -> VerificationReport {
    let started = Instant::now();
    let per_n: Vec<Vec<Counterexample>> = par_map_range(1, max_n, |n| {
            let mut out = Vec::new();
            let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
            let p_n = p_signed(n);
            for k in 1..=max_k {
                let loc: Vec<(&str, i64)> = vec![("k", i64::from(k)), ("n", i64::from(n))];
                let overflow = |out: &mut Vec<Counterexample>, claim: &str| {
                    out.push(cx(
                        claim,
                        &loc,
                        "exact value exceeds the i64 range; not verifiable here".into(),
                    ));
                };

                let (nbar, mbar) = match (
                    table.positive_rank_moment(k),
                    table.positive_crank_moment(k),
                ) {
                    (Ok(a), Ok(b)) => (a, b),
                    _ => {
                        overflow(&mut out, "positive moments computable exactly");
                        continue;
                    }
                };

                // Tail-sum formulas for the positive moments.
                let mut rank_acc: Option<i64> = Some(0);
                let mut crank_acc: Option<i64> = Some(0);
                let mut boundary_acc: Option<i64> = Some(0);
                for m in 1..=n {
                    let gap = pow_gap(m, k);
                    rank_acc = rank_acc.zip(gap).and_then(|(acc, g)| {
                        acc.checked_add(g.checked_mul(p_n - table.n_leq(m - 1))?)
                    });
                    crank_acc = crank_acc.zip(gap).and_then(|(acc, g)| {
                        acc.checked_add(g.checked_mul(p_n - table.m_leq(m - 1))?)
                    });
                    if m < n {
                        boundary_acc = boundary_acc.zip(gap).and_then(|(acc, g)| {
                            acc.checked_add(
                                g.checked_mul(table.n_leq(m - 1) - table.m_leq(m - 1))?,
                            )
                        });
                    }
                }
                match rank_acc {
                    Some(acc) if acc % 2 == 0 && acc / 2 == nbar => {}
                    Some(acc) => out.push(cx(
                        "positive rank moment equals its tail-sum formula",
                        &loc,
                        format!("moment {nbar}, half of tail sum {acc}"),
                    )),
                    None => overflow(&mut out, "positive rank moment equals its tail-sum formula"),
                }
                match crank_acc {
                    Some(acc) if acc % 2 == 0 && acc / 2 == mbar => {}
                    Some(acc) => out.push(cx(
                        "positive crank moment equals its tail-sum formula",
                        &loc,
                        format!("moment {mbar}, half of tail sum {acc}"),
                    )),
                    None => overflow(&mut out, "positive crank moment equals its tail-sum formula"),
                }
                match boundary_acc.zip(pow_gap(n, k)) {
                    Some((acc, edge)) if acc % 2 == 0 && acc / 2 + edge == mbar - nbar => {}
                    Some((acc, edge)) => out.push(cx(
                        "moment gap equals the weighted tail differences plus n^k - (n-1)^k",
                        &loc,
                        format!("gap {}, formula {}", mbar - nbar, acc / 2 + edge),
                    )),
                    None => overflow(
                        &mut out,
                        "moment gap equals the weighted tail differences plus n^k - (n-1)^k",
                    ),
                }
                if mbar <= nbar {
                    out.push(cx(
                        "positive crank moment strictly exceeds positive rank moment",
                        &loc,
                        format!("crank moment {mbar} <= rank moment {nbar}"),
                    ));
                }

                // Ordinary (two-sided) moments: strict inequality for even
                // order, vanishing for odd order.
                match (table.rank_moment(k), table.crank_moment(k)) {
                    (Ok(nk), Ok(mk)) => {
                        if k % 2 == 0 && mk <= nk {
                            out.push(cx(
                                "even crank moment strictly exceeds even rank moment",
                                &loc,
                                format!("M_{k}({n}) = {mk} <= N_{k}({n}) = {nk}"),
                            ));
                        }
                        if k % 2 == 1 && nk != 0 {
                            out.push(cx(
                                "odd rank moments vanish",
                                &loc,
                                format!("N_{k}({n}) = {nk}"),
                            ));
                        }
                        if k % 2 == 1 && n >= 2 && mk != 0 {
                            out.push(cx(
                                "odd crank moments vanish",
                                &loc,
                                format!("M_{k}({n}) = {mk}"),
                            ));
                        }
                    }
                    _ => overflow(&mut out, "ordinary moments computable exactly"),
                }
            }
            out
        });

    let counterexamples = per_n.into_iter().flatten().collect();
    let lattice = format!("1 <= k <= {max_k}, 1 <= n <= {max_n}");
    let claims = vec![
        Claim::new("positive rank moment equals its tail-sum formula", lattice.clone()),
        Claim::new("positive crank moment equals its tail-sum formula", lattice.clone()),
        Claim::new(
            "moment gap equals the weighted tail differences plus n^k - (n-1)^k",
            lattice.clone(),
        ),
        Claim::new(
            "positive crank moment strictly exceeds positive rank moment",
            lattice.clone(),
        ),
        Claim::new(
            "even crank moment strictly exceeds even rank moment",
            format!("even k <= {max_k}, 1 <= n <= {max_n}"),
        ),
        Claim::new(
            "odd rank moments vanish",
            format!("odd k <= {max_k}, 1 <= n <= {max_n}"),
        ),
        Claim::new(
            "odd crank moments vanish",
            format!("odd k <= {max_k}, 2 <= n <= {max_n}"),
        ),
    ];
    VerificationReport::finish(
        "moments",
        claims,
        counterexamples,
        Vec::new(),
        Vec::new(),
        started,
    )
}

// ---------------------------------------------------------------------------
// The smallest-parts function and the spt-crank.

/// Checks `spt` reference values and the three congruences up to `max_n`,
/// and — up to `min(max_n, S_PARTITION_CEILING)` — the structural facts of
/// the signed spt-crank counts: total, symmetry, nonnegative unimodality,
/// the bridge to rank/crank band counts, and the exact residue
/// equidistribution behind the mod-5 and mod-7 congruences.
pub fn verify_spt(max_n: u32) -> VerificationReport {
    let started = Instant::now();
    let s_cap = max_n.min(S_PARTITION_CEILING);

    // Reference values and congruences need only the fast spt walk.
    let spt_values: Vec<u64> = par_map_range(0, max_n, spt);
    let mut counterexamples = Vec::new();
    for (n, expected) in [(1u32, 1u64), (2, 3), (3, 5), (4, 10), (5, 14)] {
        if n <= max_n && spt_values[n as usize] != expected {
            counterexamples.push(cx(
                "spt matches the pinned reference values",
                &[("n", i64::from(n))],
                format!("spt({n}) = {}, expected {expected}", spt_values[n as usize]),
            ));
        }
    }
    for n in 1..=max_n {
        let value = spt_values[n as usize];
        for (modulus, residue) in [(5u64, 4u32), (7, 5), (13, 6)] {
            if u64::from(n) % modulus == u64::from(residue) && !value.is_multiple_of(modulus) {
                counterexamples.push(cx(
                    "spt congruences mod 5, 7, 13",
                    &[("modulus", modulus as i64), ("n", i64::from(n))],
                    format!("spt({n}) = {value} is not divisible by {modulus}"),
                ));
            }
        }
    }

    // Structural checks that need the full signed distribution.
    let per_n: Vec<Vec<Counterexample>> = par_map_range(1, s_cap, |n| {
            let mut out = Vec::new();
            let row = n_s_row(n);
            let at = |m: i64| row.get(&m).copied().unwrap_or(0);
            let spt_n = spt_values[n as usize] as i64;

            let total: i64 = row.values().sum();
            if total != spt_n {
                out.push(cx(
                    "signed spt-crank counts total spt(n)",
                    &[("n", i64::from(n))],
                    format!("total {total}, spt {spt_n}"),
                ));
            }
            for (&m, &count) in row.iter().filter(|(&m, _)| m > 0) {
                if at(-m) != count {
                    out.push(cx(
                        "N_S(m, n) = N_S(-m, n)",
                        &[("m", m), ("n", i64::from(n))],
                        format!("N_S({m}) = {count}, N_S({}) = {}", -m, at(-m)),
                    ));
                }
            }
            let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
            for m in 0..=i64::from(n) {
                let here = at(m);
                let next = at(m + 1);
                if here < 0 || here < next {
                    out.push(cx(
                        "N_S(m, n) >= N_S(m+1, n) >= 0",
                        &[("m", m), ("n", i64::from(n))],
                        format!("N_S({m}) = {here}, N_S({}) = {next}", m + 1),
                    ));
                }
                if n >= 2 {
                    let lhs = 2 * (here - next);
                    let rhs = table.n_leq(m as u32) - table.m_leq(m as u32);
                    if lhs != rhs {
                        out.push(cx(
                            "2 (N_S(m, n) - N_S(m+1, n)) = #{|rank| <= m} - #{|crank| <= m}",
                            &[("m", m), ("n", i64::from(n))],
                            format!("spt-crank side {lhs}, rank/crank side {rhs}"),
                        ));
                    }
                }
            }
            for (modulus, residue) in [(5u32, 4u32), (7, 5)] {
                if n % modulus != residue {
                    continue;
                }
                if spt_n % i64::from(modulus) != 0 {
                    continue; // already reported by the congruence claim
                }
                let share = spt_n / i64::from(modulus);
                for k in 0..i64::from(modulus) {
                    let class: i64 = row
                        .iter()
                        .filter(|(&m, _)| m.rem_euclid(i64::from(modulus)) == k)
                        .map(|(_, &c)| c)
                        .sum();
                    if class != share {
                        out.push(cx(
                            "residue classes of the spt-crank split spt(n) evenly",
                            &[("k", k), ("modulus", i64::from(modulus)), ("n", i64::from(n))],
                            format!("class total {class}, expected {share}"),
                        ));
                    }
                }
            }
            out
        });
    counterexamples.extend(per_n.into_iter().flatten());

    let claims = vec![
        Claim::new("spt matches the pinned reference values", "n in {1, 2, 3, 4, 5}".to_string()),
        Claim::new(
            "spt congruences mod 5, 7, 13",
            format!("n = 5j+4, 7j+5, 13j+6 with n <= {max_n}"),
        ),
        Claim::new(
            "signed spt-crank counts total spt(n)",
            format!("1 <= n <= {s_cap}"),
        ),
        Claim::new("N_S(m, n) = N_S(-m, n)", format!("1 <= n <= {s_cap}, all m")),
        Claim::new(
            "N_S(m, n) >= N_S(m+1, n) >= 0",
            format!("1 <= n <= {s_cap}, 0 <= m <= n"),
        ),
        Claim::new(
            "2 (N_S(m, n) - N_S(m+1, n)) = #{|rank| <= m} - #{|crank| <= m}",
            format!("2 <= n <= {s_cap}, 0 <= m <= n"),
        ),
        Claim::new(
            "residue classes of the spt-crank split spt(n) evenly",
            format!("n = 5j+4 mod 5 and n = 7j+5 mod 7, n <= {s_cap}"),
        ),
    ];
    VerificationReport::finish(
        "spt",
        claims,
        counterexamples,
        Vec::new(),
        Vec::new(),
        started,
    )
}

// ---------------------------------------------------------------------------
// Everything.

/// Runs every suite.  The injection sweep is capped at
/// `n <= 30, m <= 8` and the moment suite at `k <= 6, n <= 40` (each claim
/// lattice records the range actually run); the other suites use `max_n` and
/// `max_m` as given.
pub fn verify_all(max_n: u32, max_m: u32) -> Vec<VerificationReport> {
    vec![
        verify_conjecture(max_n, max_m),
        verify_injection_sweep(max_n.min(SWEEP_N_CEILING), max_m.min(SWEEP_M_CEILING)),
        verify_identities(max_n),
        verify_moments(6, max_n.min(40)),
        verify_spt(max_n),
    ]
}
