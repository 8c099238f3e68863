//! The `qecc` command-line interface.
//!
//! Exit codes: 0 success or pass, 1 verified failure or no result, 2 usage
//! or data error. Every command accepts `--json`.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::codes::{n_min_bound, DistanceTable, LinearCode, MAX_EXHAUSTIVE_K};
use crate::cssplus::{CodeParams, PlusCode};
use crate::error::{Error, Result};
use crate::gf2::BinMatrix;
use crate::qstate::{
    min_n_for, quantum_hamming_bound, verify_orthogonal, Budget, OrthogonalityReport, SignedCode,
    ORACLE_MAX_K, ORACLE_MAX_N,
};
use crate::registry::{Built, Kind, Record, Registry};
use crate::search::{search_displacements, search_signs, SignSearchOptions};

/// Environment variable that sets the number of worker threads.
pub const WORKERS_ENV: &str = "QECC_WORKERS";

/// Largest distance the check-column fallback will establish.
const BOUNDED_MAX_D: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "qecc", version, about = "Build and verify quantum error-correcting codes")]
pub struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or show bundled codes.
    Registry {
        #[command(subcommand)]
        action: RegistryAction,
    },
    /// Verify a code classically and with the state oracle.
    Verify(VerifyArgs),
    /// Write out every code vector with its signed words.
    Expand {
        /// Registry name or record file.
        target: String,
    },
    /// Tables of length bounds.
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
    /// Search for sign allocations or displacement rows.
    Search {
        #[command(subcommand)]
        action: SearchAction,
    },
}

#[derive(Subcommand, Debug)]
enum RegistryAction {
    List,
    Show { name: String },
}

#[derive(Args, Debug, Clone, Copy, Default)]
struct BudgetArgs {
    /// Joint error weight for the oracle.
    #[arg(long, conflicts_with_all = ["tx", "tz"])]
    t: Option<usize>,
    /// Amplitude-error weight for the oracle.
    #[arg(long, requires = "tz")]
    tx: Option<usize>,
    /// Phase-error weight for the oracle.
    #[arg(long, requires = "tx")]
    tz: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> Option<Budget> {
        match (self.t, self.tx, self.tz) {
            (Some(t), _, _) => Some(Budget::Joint { t }),
            (None, Some(tx), Some(tz)) => Some(Budget::Pair { tx, tz }),
            _ => None,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Registry name or record file.
    target: String,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Only compute classical distances.
    #[arg(long)]
    classical_only: bool,
}

#[derive(Subcommand, Debug)]
enum TableAction {
    /// Smallest n admitting a dual pair with distances d and d⊥.
    Nmin {
        /// Distance table file (`n k d_lower d_upper` lines); defaults to the bundled one.
        #[arg(long)]
        dtable: Option<String>,
        /// Largest d⊥ row.
        #[arg(long, default_value_t = 15)]
        max_dperp: usize,
    },
    /// Quantum Hamming bound: smallest n for each K.
    Bound {
        /// K values, e.g. `1-5` or `0,2,4`.
        #[arg(long = "K", default_value = "1-16")]
        k: String,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SearchAction {
    /// Sign allocations for a skeleton (base coset and displacement rows).
    Signs {
        /// Registry name or record file supplying `gcos` and `d`.
        #[arg(long)]
        skeleton: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// One independent sign vector per code vector.
        #[arg(long)]
        nonlinear: bool,
        /// Keep the sign offset at zero.
        #[arg(long)]
        no_offset: bool,
        /// Use all 2^w vectors per slot, stopping after this many placements.
        #[arg(long)]
        exhaustive: Option<u64>,
        /// Name for the emitted record.
        #[arg(long)]
        name: Option<String>,
    },
    /// Displacement rows from the generator of C1.
    Displacements {
        /// Registry name, construct expression (`cyclic 0,3 5 19`) or matrix file.
        #[arg(long)]
        check: String,
        #[arg(long = "K")]
        k: usize,
        #[arg(long, default_value_t = 3)]
        target: usize,
        /// Name for the emitted record.
        #[arg(long)]
        name: Option<String>,
    },
}

/// Outcome of a command: exit code plus text and JSON renderings.
struct Outcome {
    code: u8,
    text: String,
    json: serde_json::Value,
}

impl Outcome {
    fn new(pass: bool, text: String, json: serde_json::Value) -> Self {
        Self { code: if pass { 0 } else { 1 }, text, json }
    }
}

/// Runs the CLI with the process arguments.
pub fn main() -> ExitCode {
    run(std::env::args_os())
}

/// Runs the CLI with explicit arguments, printing to stdout/stderr.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    configure_workers();
    let json = cli.json;
    match execute(cli) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if json {
                println!("{}", json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}

fn configure_workers() {
    if let Some(n) = std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn execute(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Registry { action: RegistryAction::List } => cmd_list(),
        Command::Registry { action: RegistryAction::Show { name } } => cmd_show(&name),
        Command::Verify(args) => cmd_verify(&args),
        Command::Expand { target } => cmd_expand(&target),
        Command::Table { action: TableAction::Nmin { dtable, max_dperp } } => {
            cmd_nmin(dtable.as_deref(), max_dperp)
        }
        Command::Table { action: TableAction::Bound { k, t } } => cmd_bound(&k, t),
        Command::Search { action } => match action {
            SearchAction::Signs { skeleton, budget, nonlinear, no_offset, exhaustive, name } => {
                let opts = SignSearchOptions {
                    linear_only: !nonlinear,
                    allow_offset: !no_offset,
                    exhaustive_limit: exhaustive,
                };
                cmd_search_signs(&skeleton, budget.budget(), opts, name)
            }
            SearchAction::Displacements { check, k, target, name } => {
                cmd_search_displacements(&check, k, target, name)
            }
        },
    }
}

/// Registry plus the record named by `target`, which may be a file path.
fn resolve(target: &str) -> Result<(Registry, Record)> {
    if Path::new(target).is_file() {
        let text = std::fs::read_to_string(target)?;
        let record: Record = text.parse()?;
        let reg = Registry::with_extra(record.clone())?;
        Ok((reg, record))
    } else {
        let reg = Registry::bundled();
        let record = reg.get(target)?.clone();
        Ok((reg, record))
    }
}

fn cmd_list() -> Result<Outcome> {
    let reg = Registry::bundled();
    let mut text = String::new();
    writeln!(text, "{:<22} {:<10} {:<8} {:>4} {:>4}  declared", "name", "kind", "source", "n", "k/K")
        .unwrap();
    let mut rows = Vec::new();
    for r in reg.records() {
        let declared: Vec<String> = r.declared.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(
            text,
            "{:<22} {:<10} {:<8} {:>4} {:>4}  {}",
            r.name,
            r.kind.to_string(),
            r.provenance.to_string(),
            r.n,
            r.k,
            declared.join(" ")
        )
        .unwrap();
        rows.push(json!({
            "name": r.name, "kind": r.kind, "provenance": r.provenance, "aliases": r.aliases,
            "n": r.n, "k": r.k, "declared": r.declared,
        }));
    }
    Ok(Outcome::new(true, text, json!({ "entries": rows })))
}

fn cmd_show(name: &str) -> Result<Outcome> {
    let reg = Registry::bundled();
    let r = reg.get(name)?;
    let mut text = r.text.clone();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Outcome::new(true, text, serde_json::to_value(r).expect("serializable")))
}

#[derive(Serialize)]
struct ClassicalReport {
    n: usize,
    k: usize,
    d: usize,
    dperp: Option<usize>,
}

fn distance_any(c: &LinearCode) -> Result<usize> {
    match c.min_distance() {
        Err(Error::DimensionTooLarge { .. }) => c.min_distance_via_checks(BOUNDED_MAX_D).ok_or_else(|| {
            Error::InvalidParameter(format!("distance above {BOUNDED_MAX_D} with k > {MAX_EXHAUSTIVE_K}"))
        }),
        other => other,
    }
}

fn plus_params(p: &PlusCode) -> Result<CodeParams> {
    match p.verify_plus() {
        Err(Error::DimensionTooLarge { .. }) => p.verify_plus_bounded(BOUNDED_MAX_D),
        other => other,
    }
}

fn oracle_fits(code: &SignedCode) -> bool {
    code.n() <= ORACLE_MAX_N && code.k() <= ORACLE_MAX_K
}

fn render_oracle(text: &mut String, r: &OrthogonalityReport) {
    writeln!(
        text,
        "oracle ({}): {} ({} states, {} conflicts)",
        r.budget,
        if r.pass { "pass" } else { "fail" },
        r.states,
        r.conflict_count
    )
    .unwrap();
    for c in r.first_conflicts.iter().take(5) {
        writeln!(text, "  v{} {} vs v{} {}: inner {}", c.b1, c.error1, c.b2, c.error2, c.inner).unwrap();
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let (reg, record) = resolve(&args.target)?;
    let built = reg.build_record(&record, 0)?;
    let mut text = format!(
        "{} ({} {}, n = {}, {} = {})\n",
        record.name,
        record.kind,
        record.provenance,
        record.n,
        if record.kind == Kind::Classical { "k" } else { "K" },
        record.k
    );
    let mut pass = true;
    let mut classical = serde_json::Value::Null;
    let mut oracle = serde_json::Value::Null;
    match built {
        Built::Params => {
            return Err(Error::InvalidParameter(format!(
                "{} stores parameters only; no matrices to verify",
                record.name
            )))
        }
        Built::Classical(c) => {
            let d = distance_any(&c)?;
            let dual = c.dual();
            let dperp = if dual.k() == 0 { None } else { Some(distance_any(&dual)?) };
            if let Some(want) = record.declared("d") {
                pass &= want == d;
            }
            if let (Some(want), Some(got)) = (record.declared("dperp"), dperp) {
                pass &= want == got;
            }
            writeln!(
                text,
                "classical: [{}, {}, {d}], dual distance {}",
                c.n(),
                c.k(),
                dperp.map_or("-".to_string(), |v| v.to_string())
            )
            .unwrap();
            classical = serde_json::to_value(ClassicalReport { n: c.n(), k: c.k(), d, dperp }).unwrap();
        }
        Built::Plus(p) => {
            let params = plus_params(&p)?;
            for (key, got) in [("d1", params.d1), ("d2", params.d2)] {
                if let Some(want) = record.declared(key) {
                    pass &= want == got;
                }
            }
            writeln!(
                text,
                "classical: d1 = {}, d2 = {} (t1 = {}, t2 = {})",
                params.d1, params.d2, params.t1, params.t2
            )
            .unwrap();
            classical = serde_json::to_value(params).unwrap();
            if !args.classical_only {
                let code = SignedCode::from_plus(&p)?;
                let budget = args.budget.budget();
                if budget.is_some() || oracle_fits(&code) {
                    let budget = budget.unwrap_or(Budget::Pair { tx: params.t1, tz: params.t2 });
                    let r = verify_orthogonal(&code, budget)?;
                    pass &= r.pass;
                    render_oracle(&mut text, &r);
                    oracle = serde_json::to_value(&r).unwrap();
                } else {
                    writeln!(text, "oracle: skipped (beyond n <= {ORACLE_MAX_N}, K <= {ORACLE_MAX_K}); classical result is authoritative").unwrap();
                }
            }
        }
        Built::Signed(code) => {
            if args.classical_only {
                return Err(Error::InvalidParameter(
                    "signed codes have no classical verifier; drop --classical-only".into(),
                ));
            }
            let budget = match args.budget.budget() {
                Some(b) => b,
                None => Budget::Joint {
                    t: record.declared("d").map(|d| d.saturating_sub(1) / 2).ok_or_else(|| {
                        Error::InvalidParameter("no declared d; pass --t or --tx/--tz".into())
                    })?,
                },
            };
            let r = verify_orthogonal(&code, budget)?;
            pass &= r.pass;
            render_oracle(&mut text, &r);
            oracle = serde_json::to_value(&r).unwrap();
        }
    }
    writeln!(text, "result: {}", if pass { "PASS" } else { "FAIL" }).unwrap();
    let json = json!({
        "name": record.name, "kind": record.kind, "n": record.n, "k": record.k,
        "declared": record.declared, "classical": classical, "oracle": oracle, "pass": pass,
    });
    Ok(Outcome::new(pass, text, json))
}

fn cmd_expand(target: &str) -> Result<Outcome> {
    let (reg, record) = resolve(target)?;
    let code = reg.signed(&record.name)?;
    let text = code.listing()?;
    let vectors: Vec<serde_json::Value> = (0..1usize << code.k())
        .map(|b| {
            let words = code.signed_words(b)?;
            Ok(json!({
                "b": b,
                "terms": words.iter().map(|(w, a)| json!({ "word": w.to_string(), "sign": a })).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<_>>()?;
    Ok(Outcome::new(true, text, json!({ "name": record.name, "vectors": vectors })))
}

fn cmd_nmin(dtable: Option<&str>, max_dperp: usize) -> Result<Outcome> {
    let table = match dtable {
        Some(path) => std::fs::read_to_string(path)?.parse::<DistanceTable>()?,
        None => DistanceTable::bundled(),
    };
    let ds: Vec<usize> = (3..=max_dperp).step_by(2).collect();
    let mut text = format!("{:>6} |", "d⊥ \\ d");
    for d in &ds {
        write!(text, "{d:>5}").unwrap();
    }
    text.push('\n');
    let mut entries = Vec::new();
    for &dp in &ds {
        write!(text, "{dp:>6} |").unwrap();
        for &d in ds.iter().filter(|&&d| d <= dp) {
            let v = match n_min_bound(d, dp, &table) {
                Ok(n) => Some(n),
                Err(Error::TableCoverage { .. }) => None,
                Err(e) => return Err(e),
            };
            write!(text, "{:>5}", v.map_or("-".to_string(), |n| n.to_string())).unwrap();
            entries.push(json!({ "d": d, "dperp": dp, "n_min": v }));
        }
        text.push('\n');
    }
    Ok(Outcome::new(true, text, json!({ "entries": entries })))
}

fn parse_k_list(spec: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad K value {s:?}")));
        match part.split_once('-').or_else(|| part.split_once("..")) {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.trim_start_matches('.'))?);
                if b < a {
                    return Err(Error::Parse(format!("empty K range {part:?}")));
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(out)
}

fn cmd_bound(k_spec: &str, t: usize) -> Result<Outcome> {
    let ks = parse_k_list(k_spec)?;
    let mut text = format!("{:>4} {:>4} {:>6}  lhs <= 2^n\n", "K", "t", "n_min");
    let mut entries = Vec::new();
    for k in ks {
        let n = min_n_for(k, t);
        let r = quantum_hamming_bound(n, k, t);
        writeln!(
            text,
            "{k:>4} {t:>4} {n:>6}  {} <= {}{}",
            r.lhs,
            r.rhs,
            if r.perfect { " (perfect)" } else { "" }
        )
        .unwrap();
        entries.push(json!({ "K": k, "t": t, "n_min": n, "bound": r }));
    }
    Ok(Outcome::new(true, text, json!({ "entries": entries })))
}

/// Base coset and displacement rows of a registry entry.
fn skeleton_of(reg: &Registry, record: &Record) -> Result<(BinMatrix, BinMatrix)> {
    match reg.build_record(record, 0)? {
        Built::Signed(s) => Ok((s.gcos().clone(), s.d_matrix().clone())),
        Built::Plus(p) => Ok((p.h2().clone(), p.d_matrix().clone())),
        _ => Err(Error::InvalidParameter(format!("{} has no base coset", record.name))),
    }
}

fn command_line() -> String {
    let args: Vec<String> =
        std::env::args().skip(1).map(|a| if a.contains(' ') { format!("'{a}'") } else { a }).collect();
    format!("qecc {}", args.join(" "))
}

fn block(out: &mut String, key: &str, rows: impl IntoIterator<Item = String>) {
    writeln!(out, "{key}:").unwrap();
    for r in rows {
        writeln!(out, "{r}").unwrap();
    }
    out.push('\n');
}

/// Registry record text for a signed code.
pub fn signed_record(name: &str, code: &SignedCode, d: usize, command: &str) -> String {
    let mut out = format!(
        "name: {name}\nkind: signed\nprovenance: derived\nn: {}\nK: {}\ndeclared: d={d}\ncommand: {command}\n",
        code.n(),
        code.k()
    );
    block(&mut out, "gcos", code.gcos().rows().iter().map(ToString::to_string));
    block(&mut out, "d", code.d_matrix().rows().iter().map(ToString::to_string));
    block(&mut out, "signs", code.sign_gen().iter().map(|s| s.to_hex()));
    block(&mut out, "offset", [code.sign_offset().to_hex()]);
    out.truncate(out.trim_end().len());
    out.push('\n');
    out
}

/// Registry record text for a plus code.
pub fn plus_record(
    name: &str,
    p: &PlusCode,
    params: &CodeParams,
    h1_from: Option<&str>,
    command: &str,
) -> String {
    let mut out = format!(
        "name: {name}\nkind: plus\nprovenance: derived\nn: {}\nK: {}\ndeclared: d1={} d2={}\ncommand: {command}\n",
        p.n(),
        p.k(),
        params.d1,
        params.d2
    );
    match h1_from {
        Some(src) => writeln!(out, "h1-from: {src}").unwrap(),
        None => block(&mut out, "h1", p.h1().rows().iter().map(ToString::to_string)),
    }
    block(&mut out, "d", p.d_matrix().rows().iter().map(ToString::to_string));
    out.truncate(out.trim_end().len());
    out.push('\n');
    out
}

fn cmd_search_signs(
    skeleton: &str,
    budget: Option<Budget>,
    opts: SignSearchOptions,
    name: Option<String>,
) -> Result<Outcome> {
    let (reg, record) = resolve(skeleton)?;
    let (gcos, d) = skeleton_of(&reg, &record)?;
    let budget = budget.unwrap_or(Budget::Joint { t: 1 });
    let report = search_signs(&gcos, &d, budget, opts)?;
    let mut text = format!(
        "examined {} candidates against {} constraints in {:.3} s{}\n",
        report.candidates_examined,
        report.constraints,
        report.elapsed.as_secs_f64(),
        if report.limit_hit { " (limit reached)" } else { "" }
    );
    let d_target = match budget {
        Budget::Joint { t } => 2 * t + 1,
        Budget::Pair { tx, tz } => 2 * tx.min(tz) + 1,
    };
    let rec = report.found.as_ref().map(|code| {
        let name = name.unwrap_or_else(|| format!("signed-{}-{}-{}", code.n(), code.k(), d_target));
        signed_record(&name, code, d_target, &command_line())
    });
    match &rec {
        Some(r) => {
            text.push_str("found:\n");
            text.push_str(r);
        }
        None => text.push_str("no result\n"),
    }
    let json = json!({
        "found": rec.is_some(),
        "candidates_examined": report.candidates_examined,
        "constraints": report.constraints,
        "limit_hit": report.limit_hit,
        "elapsed_ms": report.elapsed.as_secs_f64() * 1e3,
        "signs": report.found.as_ref().map(|c| c.sign_gen().iter().map(|s| s.to_hex()).collect::<Vec<_>>()),
        "offset": report.found.as_ref().map(|c| c.sign_offset().to_hex()),
        "record": rec,
    });
    Ok(Outcome::new(report.found.is_some(), text, json))
}

/// Check matrix from a registry name, a matrix file, or a construct expression.
fn check_source(spec: &str) -> Result<(BinMatrix, Option<String>)> {
    if Path::new(spec).is_file() {
        let m = BinMatrix::parse_text(&std::fs::read_to_string(spec)?)?;
        return Ok((m, None));
    }
    let reg = Registry::bundled();
    if let Ok(r) = reg.get(spec) {
        if let Built::Plus(p) = reg.build_record(r, 0)? {
            return Ok((p.h1().clone(), Some(r.name.clone())));
        }
    }
    let code = reg.resolve_classical(spec)?;
    Ok((code.check().clone(), Some(spec.to_string())))
}

fn cmd_search_displacements(check: &str, k: usize, target: usize, name: Option<String>) -> Result<Outcome> {
    let (h1, source) = check_source(check)?;
    let report = search_displacements(&h1, k, target)?;
    let mut text = format!(
        "examined {} row subsets in {:.3} s\n",
        report.subsets_examined,
        report.elapsed.as_secs_f64()
    );
    let rec = match (&report.found, &report.params) {
        (Some(p), Some(params)) => {
            let name =
                name.unwrap_or_else(|| format!("plus-{}-{}-{}", p.n(), p.k(), params.d1.min(params.d2)));
            Some(plus_record(&name, p, params, source.as_deref(), &command_line()))
        }
        _ => None,
    };
    match &rec {
        Some(r) => {
            text.push_str("found:\n");
            text.push_str(r);
        }
        None => text.push_str("no result\n"),
    }
    let json = json!({
        "found": rec.is_some(),
        "subsets_examined": report.subsets_examined,
        "elapsed_ms": report.elapsed.as_secs_f64() * 1e3,
        "params": report.params,
        "record": rec,
    });
    Ok(Outcome::new(report.found.is_some(), text, json))
}
