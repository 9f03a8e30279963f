//! Command-line front end.
//!
//! Exit codes: 0 when everything verified, 1 on any discrepancy, 2 on a
//! usage or configuration error.

mod range;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::bijection::{apply_motions_logged, certify, decode, Encoding};
use crate::partitions::{enumerate_distinct_pm1_mod3, enumerate_schur, schur_gf_oracle, Partition};
use crate::qpoly::XSeries;
use crate::schur_sums::verify::acceptance_matrix;
use crate::schur_sums::{
    ali_gf_truncated, bounded_gf, even_odd_split_lhs, kursungoz_gf_truncated,
    schur_product_truncated, verify_with, IdentityId, Params, VerifyOptions,
};

pub use range::IntRange;
pub use report::{ReportDocument, Summary, EPOCH};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Hard cap on `N`, `M`, `L`, `|a|` and `--max-n`.
pub const MAX_N: i64 = 100;
/// Hard cap on `--T`.
pub const MAX_T: i64 = 500;

#[derive(Debug, Parser)]
#[command(
    name = "qschur",
    version,
    about = "Exact checks of Schur-type q-series identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads; defaults to the number of processors.
    #[arg(long, global = true, env = "QSCHUR_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify one identity over a parameter grid.
    Verify(VerifyArgs),
    /// Count (or list) the two partition classes of Schur's theorem.
    Enumerate(EnumerateArgs),
    /// Drive the bijection between encodings and admissible partitions.
    #[command(subcommand)]
    Bijection(BijectionCommand),
    /// Print a truncated generating function.
    Series(SeriesArgs),
    /// Run the whole acceptance matrix into one document.
    Report(ReportArgs),
}

#[derive(Debug, Default, Args)]
pub struct Ranges {
    #[arg(long = "N", allow_hyphen_values = true)]
    pub n: Option<IntRange>,
    #[arg(long = "M", allow_hyphen_values = true)]
    pub m: Option<IntRange>,
    #[arg(long = "L", allow_hyphen_values = true)]
    pub l: Option<IntRange>,
    #[arg(long = "a", allow_hyphen_values = true)]
    pub a: Option<IntRange>,
    /// Truncation degree in q.
    #[arg(long = "T")]
    pub t_bound: Option<i64>,
    /// Parity class of the Q_t sum.
    #[arg(long = "t", value_parser = clap::value_parser!(i64).range(1..=2))]
    pub t_class: Option<i64>,
    #[arg(long = "max-n")]
    pub max_n: Option<i64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity name, e.g. `schur-poly` or `SCHUR_POLY`.
    #[arg(long)]
    pub identity: String,
    #[command(flatten)]
    pub ranges: Ranges,
    /// Intermediate admissibility checks in the bijection sweep.
    #[arg(long)]
    pub strict: bool,
    /// Zero `elapsed_ms` and the timestamp so output is byte-stable.
    #[arg(long)]
    pub stable: bool,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Schur,
    Pm1mod3,
    Both,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long = "max-n")]
    pub max_n: i64,
    /// Only parts `<=` this (Schur class only).
    #[arg(long)]
    pub largest_part: Option<u32>,
    #[arg(long, value_enum, default_value_t = Class::Both)]
    pub class: Class,
    /// Include the partitions themselves, not just the counts.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Subcommand)]
pub enum BijectionCommand {
    /// Partition to (n1, n2, m) and motion data.
    Decode {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    /// Motion data (JSON, as printed by `decode`) to a partition.
    Encode {
        #[arg(long)]
        motion: String,
        #[arg(long)]
        strict: bool,
        /// Include the step log.
        #[arg(long)]
        log: bool,
    },
    /// Exhaustive sweep over all sizes up to `--max-n`.
    Certify {
        #[arg(long = "max-n")]
        max_n: i64,
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// Bounded series; needs `--N` (largest part).
    Bounded,
    Ali,
    Kursungoz,
    EvenOdd,
    /// Brute-force enumeration; `--N` bounds the largest part.
    Oracle,
    /// (-q,-q^2;q^3)_inf.
    Product,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub kind: SeriesKind,
    #[arg(long = "T")]
    pub t_bound: i64,
    #[arg(long = "N")]
    pub n: Option<i64>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Restrict the matrix to these identities.
    #[arg(long)]
    pub identity: Vec<String>,
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub stable: bool,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[arg(long, hide = true)]
    pub empty_matrix: bool,
}

struct Output {
    body: String,
    ok: bool,
}

type CmdResult = std::result::Result<Output, String>;

/// Parses `args` (including the program name) and runs. Never panics on bad
/// input; returns the exit code.
pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            }
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    // Fail fast on an unwritable path rather than after a long run.
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::File::create(path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.map_or(0, usize::from))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| match &cli.command {
        Command::Verify(a) => cmd_verify(a, cli.format),
        Command::Enumerate(a) => cmd_enumerate(a, cli.format),
        Command::Bijection(b) => cmd_bijection(b, cli.format),
        Command::Series(a) => cmd_series(a, cli.format),
        Command::Report(a) => cmd_report(a, cli.format),
    });
    let out = match result {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut body = out.body;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{body}"),
    }
    if out.ok {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn check_cap(name: &str, value: i64, cap: i64) -> std::result::Result<(), String> {
    if value > cap {
        Err(format!("--{name} {value} exceeds the cap {cap}"))
    } else {
        Ok(())
    }
}

/// Expands the given ranges into the parameter sets `id` reads, in
/// lexicographic order of the keys as `id` lists them.
pub fn parameter_grid(id: IdentityId, r: &Ranges) -> std::result::Result<Vec<Params>, String> {
    for (name, range) in [("N", r.n), ("M", r.m), ("L", r.l), ("a", r.a)] {
        if let Some(range) = range {
            check_cap(name, range.magnitude(), MAX_N)?;
        }
    }
    if let Some(t) = r.t_bound {
        check_cap("T", t, MAX_T)?;
    }
    if let Some(n) = r.max_n {
        check_cap("max-n", n, MAX_N)?;
    }

    let given: [(&str, Option<IntRange>); 7] = [
        ("N", r.n),
        ("M", r.m),
        ("L", r.l),
        ("a", r.a),
        ("T", r.t_bound.map(IntRange::single)),
        ("t", r.t_class.map(IntRange::single)),
        ("max_n", r.max_n.map(IntRange::single)),
    ];
    let keys = id.param_keys();
    for (k, v) in &given {
        if v.is_some() && !keys.contains(k) {
            let flag = if *k == "max_n" { "max-n" } else { k };
            return Err(format!("--{flag} does not apply to {id}"));
        }
    }

    let mut grid = vec![Params::new()];
    for key in keys {
        let Some(range) = given.iter().find(|(k, _)| k == key).and_then(|(_, v)| *v) else {
            continue;
        };
        grid = grid
            .into_iter()
            .flat_map(|p| {
                range.values().map(move |v| {
                    let mut p = p.clone();
                    p.insert(key.to_string(), v);
                    p
                })
            })
            .collect();
    }
    Ok(grid)
}

/// Runs every entry on the current pool; output order follows `entries`.
fn run_entries(
    entries: &[(IdentityId, Params)],
    opts: VerifyOptions,
    stable: bool,
) -> std::result::Result<ReportDocument, String> {
    let started_at = if stable {
        EPOCH.to_string()
    } else {
        chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
    };
    let reports = entries
        .par_iter()
        .map(|(id, p)| verify_with(*id, p, opts))
        .collect::<crate::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    let reports = reports
        .into_iter()
        .map(|mut r| {
            if stable {
                r.elapsed_ms = 0;
            }
            r
        })
        .collect();
    Ok(ReportDocument::new(started_at, reports))
}

fn render(doc: &ReportDocument, format: Format) -> Output {
    Output {
        body: match format {
            Format::Json => to_json(doc),
            Format::Text => doc.to_text(),
        },
        ok: doc.all_verified(),
    }
}

fn cmd_verify(a: &VerifyArgs, format: Format) -> CmdResult {
    let id: IdentityId = a
        .identity
        .parse()
        .map_err(|e: crate::Error| e.to_string())?;
    let entries: Vec<_> = parameter_grid(id, &a.ranges)?
        .into_iter()
        .map(|p| (id, p))
        .collect();
    let opts = VerifyOptions {
        inject_fault: a.inject_fault,
        strict: a.strict,
    };
    let doc = run_entries(&entries, opts, a.stable)?;
    Ok(render(&doc, format))
}

fn cmd_report(a: &ReportArgs, format: Format) -> CmdResult {
    let ids = a
        .identity
        .iter()
        .map(|s| s.parse::<IdentityId>().map_err(|e| e.to_string()))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let entries: Vec<_> = if a.empty_matrix {
        Vec::new()
    } else {
        acceptance_matrix()
            .into_iter()
            .filter(|(id, _)| ids.is_empty() || ids.contains(id))
            .collect()
    };
    let opts = VerifyOptions {
        inject_fault: a.inject_fault,
        strict: a.strict,
    };
    let doc = run_entries(&entries, opts, a.stable)?;
    Ok(render(&doc, format))
}

fn cmd_enumerate(a: &EnumerateArgs, format: Format) -> CmdResult {
    if a.max_n < 0 {
        return Err("--max-n must be non-negative".into());
    }
    check_cap("max-n", a.max_n, MAX_N)?;
    if a.largest_part.is_some() && a.class != Class::Schur {
        return Err("--largest-part needs --class schur".into());
    }
    let n = a.max_n as u64;
    let schur =
        matches!(a.class, Class::Schur | Class::Both).then(|| enumerate_schur(n, a.largest_part));
    let pm1 =
        matches!(a.class, Class::Pm1mod3 | Class::Both).then(|| enumerate_distinct_pm1_mod3(n));

    let mut ok = true;
    let mut rows = Vec::new();
    let mut text = String::from("n\tschur\tpm1mod3\n");
    for size in 0..=n as usize {
        let cs = schur.as_ref().map(|e| e[size].len());
        let cp = pm1.as_ref().map(|e| e[size].len());
        if let (Some(x), Some(y)) = (cs, cp) {
            ok &= x == y;
        }
        let cell = |c: Option<usize>| c.map_or("-".to_string(), |c| c.to_string());
        text.push_str(&format!("{size}\t{}\t{}\n", cell(cs), cell(cp)));
        let mut row = json!({ "n": size, "schur": cs, "pm1mod3": cp });
        if a.list {
            let list = |e: &Option<Vec<Vec<Partition>>>| {
                e.as_ref()
                    .map(|e| e[size].iter().map(|p| p.to_string()).collect::<Vec<_>>())
            };
            row["schur_partitions"] = json!(list(&schur));
            row["pm1mod3_partitions"] = json!(list(&pm1));
        }
        rows.push(row);
    }
    let body = match format {
        Format::Json => to_json(&json!({
            "max_n": a.max_n,
            "largest_part": a.largest_part,
            "class": format!("{:?}", a.class).to_lowercase(),
            "sizes": rows,
        })),
        Format::Text => text,
    };
    Ok(Output { body, ok })
}

fn encoding_text(e: &Encoding) -> String {
    let m = &e.motions;
    format!(
        "n1={} n2={} m={} r={:?} rho2={:?} rho1={:?}",
        e.config.n1, e.config.n2, e.config.m, m.r, m.rho2, m.rho1
    )
}

fn cmd_bijection(b: &BijectionCommand, format: Format) -> CmdResult {
    match b {
        BijectionCommand::Decode { partition } => {
            let p: Partition = partition.parse().map_err(|e: crate::Error| e.to_string())?;
            let e = decode(&p).map_err(|e| e.to_string())?;
            let body = match format {
                Format::Json => to_json(&e),
                Format::Text => encoding_text(&e),
            };
            Ok(Output { body, ok: true })
        }
        BijectionCommand::Encode {
            motion,
            strict,
            log,
        } => {
            let e: Encoding =
                serde_json::from_str(motion).map_err(|e| format!("bad --motion JSON: {e}"))?;
            let (state, steps) =
                apply_motions_logged(e.config, &e.motions, *strict).map_err(|e| e.to_string())?;
            let p = state.partition();
            let ok = steps.iter().all(|s| s.contracts_hold()) && p.size() == e.size();
            let body = match format {
                Format::Json => {
                    let mut v = json!({ "partition": p, "size": p.size() });
                    if *log {
                        v["steps"] = json!(steps);
                    }
                    to_json(&v)
                }
                Format::Text => {
                    let mut s = format!("{p}\n");
                    if *log {
                        for st in &steps {
                            s.push_str(&format!(
                                "{:?} pair {}: {:?}, larger part {} -> {}\n",
                                st.family, st.pair, st.rule, st.larger_before, st.larger_after
                            ));
                        }
                    }
                    s
                }
            };
            Ok(Output { body, ok })
        }
        BijectionCommand::Certify { max_n, strict } => {
            if *max_n < 0 {
                return Err("--max-n must be non-negative".into());
            }
            check_cap("max-n", *max_n, MAX_N)?;
            let cert = certify(*max_n as u64, *strict);
            let body = match format {
                Format::Json => to_json(&cert),
                Format::Text => {
                    let mut s = format!(
                        "sizes 0..={}: {} admissible, {} encodings, holds: {}\n",
                        cert.max_size,
                        cert.admissible.iter().sum::<u64>(),
                        cert.encodings.iter().sum::<u64>(),
                        cert.holds()
                    );
                    for (rule, n) in &cert.rule_counts {
                        s.push_str(&format!("{rule}\t{n}\n"));
                    }
                    for ex in &cert.examples {
                        s.push_str(&format!("{ex}\n"));
                    }
                    s
                }
            };
            Ok(Output {
                body,
                ok: cert.holds(),
            })
        }
    }
}

fn series_text(s: &XSeries) -> String {
    s.strata().map(|(x, p)| format!("x^{x}: {p}\n")).collect()
}

fn cmd_series(a: &SeriesArgs, format: Format) -> CmdResult {
    if a.t_bound < 0 {
        return Err("--T must be non-negative".into());
    }
    check_cap("T", a.t_bound, MAX_T)?;
    let t = a.t_bound;
    let bound = match (a.kind, a.n) {
        (SeriesKind::Bounded, None) => return Err("--kind bounded needs --N".into()),
        (SeriesKind::Bounded | SeriesKind::Oracle, n) => n,
        (_, Some(_)) => return Err("--N only applies to bounded and oracle".into()),
        (_, None) => None,
    };
    if let Some(n) = bound {
        if n < 0 {
            return Err("--N must be non-negative".into());
        }
        check_cap("N", n, MAX_N)?;
    }
    let series = match a.kind {
        SeriesKind::Bounded => bounded_gf(bound.unwrap_or(0), t),
        SeriesKind::Ali => ali_gf_truncated(t),
        SeriesKind::Kursungoz => kursungoz_gf_truncated(t),
        SeriesKind::EvenOdd => even_odd_split_lhs(t),
        SeriesKind::Oracle => schur_gf_oracle(t, bound.map(|n| n as u32)),
        SeriesKind::Product => {
            let p = schur_product_truncated(t);
            let body = match format {
                Format::Json => to_json(&json!({ "kind": "product", "T": t, "series": p })),
                Format::Text => p.to_string(),
            };
            return Ok(Output { body, ok: true });
        }
    };
    let kind = a
        .kind
        .to_possible_value()
        .expect("visible")
        .get_name()
        .to_string();
    let body = match format {
        Format::Json => to_json(&json!({ "kind": kind, "T": t, "N": bound, "series": series })),
        Format::Text => series_text(&series),
    };
    Ok(Output { body, ok: true })
}

/// Builds a report for an explicit list of entries; used by `report` and the
/// acceptance harness.
pub fn report_entries(
    entries: &[(IdentityId, Params)],
    opts: VerifyOptions,
    stable: bool,
) -> crate::Result<ReportDocument> {
    run_entries(entries, opts, stable).map_err(crate::Error::Usage)
}

/// `report` with default options: the full acceptance matrix written to `out`.
pub fn report_all(out: &std::path::Path) -> i32 {
    let path = out.as_os_str().to_owned();
    main_from([
        OsString::from("qschur"),
        "report".into(),
        "--out".into(),
        path,
    ])
}
