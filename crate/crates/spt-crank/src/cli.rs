//! Command-line front end: statistic tables, single-partition inspection,
//! and verification suites.
//!
//! Three subcommands:
//!
//! * `table` — emit rows of N(m, n), M(m, n), q(m, n), p(-m, n),
//!   N_S(m, n), spt(n) or the first six moments, as CSV (default) or JSON;
//! * `inspect` — show one partition's rectangle symbol, class, image and
//!   mapping trace (human-readable by default);
//! * `verify` — run a verification suite and exit `0` on pass, `1` on any
//!   counterexample.
//!
//! Standard output is byte-stable for fixed inputs; timings go to standard
//! error.  Exit codes: `0` pass, `1` verification failure or a partition
//! outside Q(m, n), `2` usage error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{classify_p, classify_q, in_q};
use crate::durfee::to_symbol;
use crate::inject::phi;
use crate::partition::{Part, Partition};
use crate::spt::{n_s_row, spt};
use crate::stats::{q_row, CrankConvention, RankCrankTable};
use crate::verify::{
    verify_all, verify_conjecture, verify_identities, verify_injection, verify_injection_sweep,
    verify_moments, verify_spt, VerificationReport,
};

const DEFAULT_MAX_N: u32 = 40;
const DEFAULT_MAX_M: u32 = 8;
const DEFAULT_SWEEP_N: u32 = 30;

#[derive(Parser)]
#[command(
    name = "spt-crank",
    version,
    about = "Partition statistics: rank/crank tables, rectangle-symbol maps, spt-crank counts, and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a table of partition statistics over a range.
    Table(TableArgs),
    /// Show one partition's rectangle symbol, class, image and trace.
    Inspect(InspectArgs),
    /// Run a verification suite; exit 0 on pass, 1 on any counterexample.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    /// Rank counts N(m, n).
    Rank,
    /// Crank counts M(m, n), with the adjusted table at n = 1.
    Crank,
    /// Rank-set hit counts q(m, n) (m >= 0).
    RanksetQ,
    /// Tail counts p(-m, n) = #{rank >= -m} (m >= 0).
    PRank,
    /// Signed spt-crank counts N_S(m, n); `--mod t` aggregates residues.
    Ns,
    /// The smallest-parts function spt(n).
    Spt,
    /// Rank/crank moments of order k = 1..6.
    Moments,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Conjecture,
    Injection,
    Identities,
    Moments,
    Spt,
    All,
}

#[derive(Args)]
struct TableArgs {
    /// What to tabulate.
    #[arg(value_enum)]
    kind: TableKind,
    /// Single weight n (alternative to --max-n).
    #[arg(long)]
    n: Option<u32>,
    /// Tabulate weights 1..=max-n.
    #[arg(long = "max-n")]
    max_n: Option<u32>,
    /// Single statistic value m (signed kinds accept negatives).
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
    /// Statistic range: 0..=max-m, or -max-m..=max-m for signed kinds.
    #[arg(long = "max-m")]
    max_m: Option<u32>,
    /// For `ns`: aggregate counts over residue classes modulo this.
    #[arg(long = "mod")]
    modulus: Option<u32>,
    /// Output format (default: csv).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: machine parallelism).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct InspectArgs {
    /// Comma-separated parts, e.g. "5,4,2,1"; empty for the empty partition.
    #[arg(long, default_value = "")]
    partition: String,
    /// Rectangle offset m >= 0.
    #[arg(long, default_value_t = 0)]
    m: u32,
    /// Output format (default: human-readable text).
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum)]
    suite: Suite,
    /// Upper end of the weight range (default 40; injection sweep 30).
    #[arg(long = "max-n")]
    max_n: Option<u32>,
    /// Upper end of the statistic range (default 8).
    #[arg(long = "max-m")]
    max_m: Option<u32>,
    /// Single-cell injection check: weight n (requires --m).
    #[arg(long)]
    n: Option<u32>,
    /// Single-cell injection check: offset m (requires --n).
    #[arg(long)]
    m: Option<u32>,
    /// Include the full mapping trace of every source symbol (injection).
    #[arg(long)]
    detail: bool,
    /// Output format (default: human-readable text).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: machine parallelism).
    #[arg(long)]
    workers: Option<usize>,
}

/// Entry point used by the binary: parses arguments (usage errors exit 2),
/// runs the command, prints its output, and returns the exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Table(args) => with_pool(args.workers, || cmd_table(&args)),
        Command::Inspect(args) => cmd_inspect(&args),
        Command::Verify(args) => with_pool(args.workers, || cmd_verify(&args)),
    };
    match outcome {
        Ok((stdout, ok)) => {
            print!("{stdout}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Runs `f` inside a dedicated rayon pool when a worker count was requested.
fn with_pool<T: Send>(
    workers: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> T {
    match workers {
        None => f(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("rayon pool")
            .install(f),
    }
}

/// Quotes a CSV field when it contains a comma, quote or newline.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let quoted: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
    quoted.join(",") + "\n"
}

/// The fixed top-level JSON shape: {command, parameters, <body_key>: body}.
fn json_document(
    command: &str,
    parameters: &BTreeMap<String, String>,
    body_key: &str,
    body: Value,
) -> String {
    let doc = json!({
        "command": command,
        "parameters": parameters,
        body_key: body,
    });
    serde_json::to_string_pretty(&doc).expect("serializable document") + "\n"
}

// ---------------------------------------------------------------------------
// table

/// One table row: column names paired with display values, in column order.
type TableRow = Vec<(&'static str, String)>;

fn cmd_table(args: &TableArgs) -> Result<(String, bool), String> {
    let ns: Vec<u32> = match (args.n, args.max_n) {
        (Some(_), Some(_)) => return Err("pass exactly one of --n or --max-n".into()),
        (Some(n), None) => vec![n],
        (None, Some(max_n)) => (1..=max_n).collect(),
        (None, None) => return Err("pass one of --n or --max-n".into()),
    };
    if args.m.is_some() && args.max_m.is_some() {
        return Err("pass at most one of --m or --max-m".into());
    }
    if args.modulus.is_some() && args.kind != TableKind::Ns {
        return Err("--mod applies only to the ns table".into());
    }
    if args.modulus == Some(0) {
        return Err("modulus must be positive".into());
    }
    if matches!(args.kind, TableKind::Spt | TableKind::Moments)
        && (args.m.is_some() || args.max_m.is_some())
    {
        return Err("this table has no m parameter".into());
    }

    // The m values to tabulate for weight n: a single value, a symmetric or
    // nonnegative range, or the full natural range of the statistic.
    let signed = matches!(args.kind, TableKind::Rank | TableKind::Crank | TableKind::Ns);
    let m_values = |n: u32| -> Vec<i64> {
        let n = i64::from(n);
        match (args.m, args.max_m) {
            (Some(m), _) => vec![m],
            (None, Some(max_m)) => {
                let hi = i64::from(max_m);
                if signed {
                    (-hi..=hi).collect()
                } else {
                    (0..=hi).collect()
                }
            }
            (None, None) => {
                if signed {
                    (-n..=n).collect()
                } else {
                    (0..=n).collect()
                }
            }
        }
    };

    let mut rows: Vec<TableRow> = Vec::new();
    for &n in &ns {
        match args.kind {
            TableKind::Rank | TableKind::Crank => {
                let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
                for m in m_values(n) {
                    let count = match args.kind {
                        TableKind::Rank => table.rank_count(m),
                        _ => table.crank_count(m),
                    };
                    rows.push(vec![
                        ("n", n.to_string()),
                        ("m", m.to_string()),
                        ("count", count.to_string()),
                    ]);
                }
            }
            TableKind::RanksetQ | TableKind::PRank => {
                for m in m_values(n) {
                    if m < 0 {
                        return Err(format!("m must be nonnegative for this table, got {m}"));
                    }
                }
                let values = m_values(n);
                let max_m = values.iter().copied().max().unwrap_or(0) as u32;
                let qrow = q_row(n, max_m);
                let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
                let p_n: i64 = table.rank_counts().values().sum();
                for m in values {
                    let column = match args.kind {
                        TableKind::RanksetQ => ("q", qrow[m as usize].to_string()),
                        _ => ("p", (p_n - table.rank_at_most(-m - 1)).to_string()),
                    };
                    rows.push(vec![
                        ("n", n.to_string()),
                        ("m", m.to_string()),
                        column,
                    ]);
                }
            }
            TableKind::Ns => {
                let row = n_s_row(n);
                if let Some(t) = args.modulus {
                    for k in 0..i64::from(t) {
                        let count: i64 = row
                            .iter()
                            .filter(|(&m, _)| m.rem_euclid(i64::from(t)) == k)
                            .map(|(_, &c)| c)
                            .sum();
                        rows.push(vec![
                            ("n", n.to_string()),
                            ("residue", k.to_string()),
                            ("modulus", t.to_string()),
                            ("count", count.to_string()),
                        ]);
                    }
                } else {
                    for m in m_values(n) {
                        let count = row.get(&m).copied().unwrap_or(0);
                        rows.push(vec![
                            ("n", n.to_string()),
                            ("m", m.to_string()),
                            ("count", count.to_string()),
                        ]);
                    }
                }
            }
            TableKind::Spt => rows.push(vec![
                ("n", n.to_string()),
                ("spt", spt(n).to_string()),
            ]),
            TableKind::Moments => {
                let table = RankCrankTable::build(n, CrankConvention::AdjustedAtOne);
                for k in 1..=6u32 {
                    let cell = |v: Result<i64, _>| -> Result<String, String> {
                        v.map(|x| x.to_string()).map_err(|_| {
                            format!("moment of order {k} at n = {n} exceeds the exact i64 range")
                        })
                    };
                    rows.push(vec![
                        ("n", n.to_string()),
                        ("k", k.to_string()),
                        ("rank_moment", cell(table.rank_moment(k))?),
                        ("crank_moment", cell(table.crank_moment(k))?),
                        ("positive_rank_moment", cell(table.positive_rank_moment(k))?),
                        ("positive_crank_moment", cell(table.positive_crank_moment(k))?),
                    ]);
                }
            }
        }
    }

    let mut parameters = BTreeMap::new();
    parameters.insert("kind".into(), kind_name(args.kind).into());
    if let Some(n) = args.n {
        parameters.insert("n".into(), n.to_string());
    }
    if let Some(max_n) = args.max_n {
        parameters.insert("max_n".into(), max_n.to_string());
    }
    if let Some(m) = args.m {
        parameters.insert("m".into(), m.to_string());
    }
    if let Some(max_m) = args.max_m {
        parameters.insert("max_m".into(), max_m.to_string());
    }
    if let Some(t) = args.modulus {
        parameters.insert("mod".into(), t.to_string());
    }

    let output = match args.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut out = String::new();
            if let Some(first) = rows.first() {
                let header: Vec<String> =
                    first.iter().map(|(name, _)| name.to_string()).collect();
                out.push_str(&csv_line(&header));
            }
            for row in &rows {
                let fields: Vec<String> = row.iter().map(|(_, v)| v.clone()).collect();
                out.push_str(&csv_line(&fields));
            }
            out
        }
        Format::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|row| {
                    Value::Object(
                        row.iter()
                            .map(|(name, v)| {
                                let value = v
                                    .parse::<i64>()
                                    .map(Value::from)
                                    .unwrap_or_else(|_| Value::from(v.clone()));
                                (name.to_string(), value)
                            })
                            .collect(),
                    )
                })
                .collect();
            json_document("table", &parameters, "generated_rows", Value::from(json_rows))
        }
    };
    Ok((output, true))
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::Rank => "rank",
        TableKind::Crank => "crank",
        TableKind::RanksetQ => "rankset-q",
        TableKind::PRank => "p-rank",
        TableKind::Ns => "ns",
        TableKind::Spt => "spt",
        TableKind::Moments => "moments",
    }
}

// ---------------------------------------------------------------------------
// inspect

fn parse_partition(text: &str) -> Result<Partition, String> {
    let mut parts: Vec<Part> = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let value: Part = token
            .parse()
            .map_err(|_| format!("'{token}' is not a positive integer part"))?;
        if value == 0 {
            return Err("parts must be positive".into());
        }
        parts.push(value);
    }
    let mut sorted = parts.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != parts {
        eprintln!("warning: parts reordered into weakly decreasing order");
    }
    Partition::new(sorted).map_err(|e| e.to_string())
}

fn cmd_inspect(args: &InspectArgs) -> Result<(String, bool), String> {
    let partition = parse_partition(&args.partition)?;
    let weight = partition.weight();
    let n: u32 = weight
        .try_into()
        .map_err(|_| "partition weight exceeds the supported range".to_string())?;
    let symbol = to_symbol(&partition, args.m);
    let member = in_q(&symbol);
    let class = classify_q(&symbol).ok();
    let trace = class.and_then(|_| phi(&symbol).ok());
    let p_class = classify_p(&symbol).ok();

    let mut parameters = BTreeMap::new();
    parameters.insert("partition".into(), partition.to_string());
    parameters.insert("m".into(), args.m.to_string());

    let output = match args.format {
        None => {
            let mut out = String::new();
            let _ = writeln!(out, "partition: {partition}");
            let _ = writeln!(out, "weight: {n}");
            let _ = writeln!(out, "offset m: {}", args.m);
            let _ = writeln!(out, "symbol: {symbol}");
            match (&class, &trace) {
                (Some(class), Some(trace)) => {
                    let _ = writeln!(out, "membership: in Q({}, {n}), class {class}", args.m);
                    let _ = writeln!(out, "map: {}", trace.map);
                    let _ = writeln!(out, "image: {}", trace.output);
                    let _ = writeln!(out, "image class: {}", trace.target_class);
                    if let Some(k) = trace.k {
                        let _ = writeln!(out, "index k: {k}");
                    }
                    if let Some(h) = trace.h {
                        let _ = writeln!(out, "index h: {h}");
                    }
                }
                _ => {
                    let _ = writeln!(out, "membership: outside Q({}, {n})", args.m);
                    if let Some(p_class) = p_class {
                        let _ = writeln!(
                            out,
                            "note: the symbol lies in P(-{}, {n}), class {p_class}",
                            args.m
                        );
                    }
                }
            }
            out
        }
        Some(Format::Csv) => {
            let header = [
                "partition", "m", "n", "symbol", "in_q", "class", "map", "image",
                "image_class", "k", "h",
            ];
            let opt = |v: Option<String>| v.unwrap_or_default();
            let fields = vec![
                partition.to_string(),
                args.m.to_string(),
                n.to_string(),
                symbol.to_string(),
                member.to_string(),
                opt(class.map(|c| c.to_string())),
                opt(trace.as_ref().map(|t| t.map.to_string())),
                opt(trace.as_ref().map(|t| t.output.to_string())),
                opt(trace.as_ref().map(|t| t.target_class.to_string())),
                opt(trace.as_ref().and_then(|t| t.k).map(|k| k.to_string())),
                opt(trace.as_ref().and_then(|t| t.h).map(|h| h.to_string())),
            ];
            csv_line(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                + &csv_line(&fields)
        }
        Some(Format::Json) => {
            let body = json!({
                "partition": partition,
                "weight": n,
                "m": args.m,
                "symbol": symbol.to_string(),
                "in_q": member,
                "class": class.map(|c| c.to_string()),
                "trace": trace,
            });
            json_document("inspect", &parameters, "report", body)
        }
    };
    Ok((output, member))
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), String> {
    let max_n = args.max_n.unwrap_or(DEFAULT_MAX_N);
    let max_m = args.max_m.unwrap_or(DEFAULT_MAX_M);
    let reports: Vec<VerificationReport> = match args.suite {
        Suite::Conjecture => vec![verify_conjecture(max_n, max_m)],
        Suite::Injection => match (args.m, args.n) {
            (Some(m), Some(n)) => vec![verify_injection(m, n, args.detail)],
            (None, None) => {
                vec![verify_injection_sweep(args.max_n.unwrap_or(DEFAULT_SWEEP_N), max_m)]
            }
            _ => return Err("single-cell injection checks need both --m and --n".into()),
        },
        Suite::Identities => vec![verify_identities(max_n)],
        Suite::Moments => vec![verify_moments(6, max_n)],
        Suite::Spt => vec![verify_spt(max_n)],
        Suite::All => verify_all(max_n, max_m),
    };
    for report in &reports {
        eprintln!("{}: {:.3}s", report.check(), report.elapsed().as_secs_f64());
    }
    let all_pass = reports.iter().all(|r| r.passed());

    let mut parameters = BTreeMap::new();
    parameters.insert("suite".into(), suite_name(args.suite).into());
    if let Some(n) = args.n {
        parameters.insert("n".into(), n.to_string());
    }
    if let Some(m) = args.m {
        parameters.insert("m".into(), m.to_string());
    }
    if args.n.is_none() || args.suite != Suite::Injection {
        parameters.insert("max_n".into(), max_n.to_string());
        parameters.insert("max_m".into(), max_m.to_string());
    }
    if args.detail {
        parameters.insert("detail".into(), "true".into());
    }

    let output = match args.format {
        None => {
            let mut out = String::new();
            for report in &reports {
                let _ = write!(out, "{report}");
            }
            out
        }
        Some(Format::Csv) => {
            let mut out = csv_line(&[
                "check".into(),
                "claim".into(),
                "lattice".into(),
                "status".into(),
                "counterexamples".into(),
            ]);
            for report in &reports {
                for claim in report.claims() {
                    out.push_str(&csv_line(&[
                        report.check().to_string(),
                        claim.name.clone(),
                        claim.lattice.clone(),
                        report.status().to_string(),
                        report.counterexamples().len().to_string(),
                    ]));
                }
            }
            out
        }
        Some(Format::Json) => {
            let body = serde_json::to_value(&reports).expect("serializable reports");
            json_document("verify", &parameters, "report", body)
        }
    };
    Ok((output, all_pass))
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Conjecture => "conjecture",
        Suite::Injection => "injection",
        Suite::Identities => "identities",
        Suite::Moments => "moments",
        Suite::Spt => "spt",
        Suite::All => "all",
    }
}
