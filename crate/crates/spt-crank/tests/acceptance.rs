//! Acceptance gate: one test per delivery criterion.
//!
//! Each test prints a single `PASS criterion N: …` / `FAIL criterion N: …`
//! line (visible with `--nocapture`, and in the failure report otherwise)
//! and then asserts, so `cargo test --test acceptance` yields exactly one
//! pass/fail line per criterion.

use spt_crank::durfee::{to_symbol, DurfeeSymbol};
use spt_crank::inject::{
    apply_inverse, phi2, phi2_inv, phi3, phi3_inv, phi4, phi5, phi6, psi3, psi3_inv, psi4,
    psi4_inv, psi5,
};
use spt_crank::partition::{Part, Partition};
use spt_crank::spt::n_s_row;
use spt_crank::stats::{CrankConvention, RankCrankTable};
use spt_crank::verify::{
    verify_conjecture, verify_identities, verify_injection_sweep, verify_moments, verify_spt,
    VerificationReport,
};

/// Prints the criterion's pass/fail line and panics on failure.
fn gate(criterion: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS {criterion}");
    } else {
        println!("FAIL {criterion}");
        for failure in failures.iter().take(10) {
            println!("  {failure}");
        }
        panic!(
            "{criterion}: {} failure(s); first: {}",
            failures.len(),
            failures[0]
        );
    }
}

/// Gate backed by a verification suite: failures are its counterexamples.
fn report_gate(criterion: &str, report: &VerificationReport) {
    let failures: Vec<String> = report
        .counterexamples()
        .iter()
        .map(|c| c.to_string())
        .collect();
    gate(criterion, &failures);
}

fn part(parts: &[Part]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn sym(m: u32, j: u32, alpha: &[Part], beta: &[Part]) -> DurfeeSymbol {
    DurfeeSymbol::new(m, j, part(alpha), part(beta)).unwrap()
}

#[test]
fn criterion_1_golden_examples() {
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool, detail: String| {
        if !ok {
            failures.push(format!("{name}: {detail}"));
        }
    };

    // Rectangle symbols of the two worked decompositions.
    let nine = part(&[7, 7, 6, 4, 3, 3, 2, 2, 2]);
    let s0 = to_symbol(&nine, 0);
    check(
        "symbol at m=0",
        s0.to_string() == "(3,3,2 / 3,3,2,2,2)_{4×4}",
        s0.to_string(),
    );
    let s2 = to_symbol(&nine, 2);
    check(
        "symbol at m=2",
        s2.to_string() == "(4,3,3,2 / 3,2,2,2)_{5×3}",
        s2.to_string(),
    );
    let short = to_symbol(&part(&[5, 5, 1]), 3);
    check(
        "symbol of (5,5,1) at m=3",
        short.to_string() == "(3,2,2,2,2 / ∅)_{3×0}",
        short.to_string(),
    );

    // phi2 on weight 31.
    let input = sym(2, 3, &[4, 2, 2], &[3, 2, 2, 1]);
    let expected = sym(2, 3, &[5, 3, 3, 1], &[2, 1, 1]);
    let image = phi2(&input).unwrap();
    check("phi2 image", image == expected, image.to_string());
    check(
        "phi2 round trip",
        phi2_inv(&image).unwrap() == input,
        String::new(),
    );

    // phi3 on weight 34.
    let input = sym(2, 3, &[5, 4, 1], &[3, 3, 2, 1]);
    let expected = sym(2, 4, &[5, 2], &[2, 1]);
    let image = phi3(&input).unwrap();
    check("phi3 image", image == expected, image.to_string());
    check(
        "phi3 round trip",
        phi3_inv(&image).unwrap() == input,
        String::new(),
    );

    // phi4 on weight 41 moves the k = 2 largest rows.
    let input = sym(2, 3, &[5, 4, 2, 1], &[3, 3, 2, 2, 2, 2]);
    let trace = phi4(&input).unwrap();
    check(
        "phi4 image",
        trace.output == sym(2, 3, &[4, 4, 1, 1, 1, 1], &[3, 3, 3, 2, 2, 1]),
        trace.output.to_string(),
    );
    check("phi4 index", trace.k == Some(2), format!("{:?}", trace.k));
    let back = apply_inverse(trace.map, &trace.output).unwrap();
    check("phi4 round trip", back == input, back.to_string());

    // phi5 on weight 34 with k = 4.
    let input = sym(1, 3, &[4, 4, 2], &[3, 3, 2, 2, 2]);
    let trace = phi5(&input).unwrap();
    check(
        "phi5 image",
        trace.output == sym(1, 4, &[2, 1, 1, 1], &[4, 3, 1, 1]),
        trace.output.to_string(),
    );
    check("phi5 index", trace.k == Some(4), format!("{:?}", trace.k));
    let back = apply_inverse(trace.map, &trace.output).unwrap();
    check("phi5 round trip", back == input, back.to_string());

    // phi6 on weight 60 with k = 6.
    let input = sym(2, 3, &[5, 5, 5, 5, 3, 2], &[3, 3, 3, 3, 2, 2, 2, 2]);
    let trace = phi6(&input).unwrap();
    check(
        "phi6 image",
        trace.output == sym(2, 4, &[4, 4, 4, 4, 3, 2, 1], &[4, 4, 2, 1, 1, 1, 1]),
        trace.output.to_string(),
    );
    check("phi6 index", trace.k == Some(6), format!("{:?}", trace.k));
    let back = apply_inverse(trace.map, &trace.output).unwrap();
    check("phi6 round trip", back == input, back.to_string());

    // psi3 on weight 35.
    let input = sym(0, 3, &[3, 3, 2, 2, 1], &[3, 3, 3, 2, 2, 2]);
    let expected = sym(0, 4, &[2, 2, 1, 1, 1], &[4, 3, 3, 1, 1]);
    let image = psi3(&input).unwrap();
    check("psi3 image", image == expected, image.to_string());
    let back = psi3_inv(&image).unwrap();
    check("psi3 round trip", back.output == input, back.output.to_string());
    check("psi3 inverse index", back.h == Some(3), format!("{:?}", back.h));

    // psi4 on weight 40.
    let input = sym(0, 3, &[3, 3, 3, 2, 2], &[3, 3, 3, 3, 2, 2, 2]);
    let expected = sym(0, 4, &[3, 2, 2, 1, 1], &[4, 4, 3, 3, 1]);
    let image = psi4(&input).unwrap();
    check("psi4 image", image == expected, image.to_string());
    check(
        "psi4 round trip",
        psi4_inv(&image).unwrap() == input,
        String::new(),
    );

    // psi5 on weight 51 with k = 3, h = 5.
    let input = sym(0, 4, &[4, 4, 4, 2, 2], &[4, 3, 3, 3, 2, 2, 2]);
    let trace = psi5(&input).unwrap();
    check(
        "psi5 image",
        trace.output == sym(0, 4, &[3, 3, 3, 2, 2, 2, 2, 1, 1], &[4, 3, 3, 1, 1, 1, 1, 1, 1]),
        trace.output.to_string(),
    );
    check(
        "psi5 indices",
        (trace.k, trace.h) == (Some(3), Some(5)),
        format!("{:?} {:?}", trace.k, trace.h),
    );
    let back = apply_inverse(trace.map, &trace.output).unwrap();
    check("psi5 round trip", back == input, back.to_string());

    gate(
        "criterion 1: the ten worked mapping examples reproduce bit-exactly",
        &failures,
    );
}

#[test]
fn criterion_2_rank_set_and_band_inequalities_to_60() {
    // m runs to 60 >= n, so every cell with 0 <= m <= n is covered.
    let report = verify_conjecture(60, 60);
    report_gate(
        "criterion 2: q(m,n) <= p(-m,n) and #{|rank|<=m} >= #{|crank|<=m} for n <= 60, m <= n",
        &report,
    );
}

#[test]
fn criterion_3_injection_suite_to_n30_m8() {
    let report = verify_injection_sweep(30, 8);
    report_gate(
        "criterion 3: the combined map is total, weight-preserving, injective, lands in its routed class, and round-trips, for n <= 30, m <= 8",
        &report,
    );
}

#[test]
fn criterion_4_identity_suite_to_50() {
    let report = verify_identities(50);
    report_gate(
        "criterion 4: cumulative rank/crank identities and symmetries hold up to n = 50",
        &report,
    );
}

#[test]
fn criterion_5_spt_values_congruences_equidistribution() {
    let report = verify_spt(60);
    report_gate(
        "criterion 5: spt values, the mod 5/7/13 congruences to n = 60, and residue equidistribution to n = 26",
        &report,
    );
}

#[test]
fn criterion_6_signed_crank_bridge_and_monotonicity() {
    let mut failures = Vec::new();
    for n in 2..=20u32 {
        let row = n_s_row(n);
        let at = |m: i64| row.get(&m).copied().unwrap_or(0);
        let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
        for m in 0..=n {
            let lo = at(i64::from(m));
            let hi = at(i64::from(m) + 1);
            if !(lo >= hi && hi >= 0) {
                failures.push(format!(
                    "monotonicity fails at m={m}, n={n}: N_S(m)={lo}, N_S(m+1)={hi}"
                ));
            }
            let bridge = 2 * (lo - hi);
            let bands = table.n_leq(m) - table.m_leq(m);
            if bridge != bands {
                failures.push(format!(
                    "bridge fails at m={m}, n={n}: 2*(N_S(m)-N_S(m+1))={bridge}, \
                     #{{|rank|<=m}}-#{{|crank|<=m}}={bands}"
                ));
            }
        }
    }
    gate(
        "criterion 6: 2(N_S(m,n)-N_S(m+1,n)) equals the rank/crank band gap and N_S is monotone nonnegative for 2 <= n <= 20, m <= n",
        &failures,
    );
}

#[test]
fn criterion_7_moment_suite_k6_n40() {
    let report = verify_moments(6, 40);
    report_gate(
        "criterion 7: moment tail-sum formulas exact, crank moments dominate strictly, even-order comparison, odd moments vanish, for k <= 6, n <= 40",
        &report,
    );
}

#[test]
fn criterion_8_asymptotics_out_of_scope() {
    // The source's asymptotic statements concern limits as n -> infinity;
    // no finite enumeration can confirm them, so the suite intentionally
    // asserts nothing about them. This line documents that decision.
    gate(
        "criterion 8: asymptotic growth statements are out of scope by design; nothing to check",
        &[],
    );
}
