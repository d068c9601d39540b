//! The `qkz` command line: one subcommand per computation plus `verify`, which
//! runs the regression suites.
//!
//! Output is JSON by default or an aligned table with `--format table`, always
//! on stdout and byte-identical for identical arguments. Timing and
//! diagnostics go to stderr. Exit codes: 0 success, 1 a verification failed,
//! 2 invalid input or a request beyond the budget. `QKZ_THREADS` sets the
//! worker count.

mod suites;
mod table;

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combin::{
    enumerate_fpl, enumerate_vsasm, lgv_tee, p_restricted_count, path_count, sfactor, vsasm_generating_function,
    LinkPattern,
};
use crate::hirota::{count_negatives, enumerate_asm, tau2_det};
use crate::qkz::{partial_sum, solve_psi, Sign};
use crate::ring::{format_rational, parse_rational, BigRational, Matrix, QTauPoly, TauPoly};
use crate::tee::{tee, tee_via_u};

pub use suites::{budget, run_suite, verify_all, Suite, BUDGETS};
use table::Table;

/// Largest L for `psi` and `sums`.
pub const MAX_PSI_L: usize = 12;
/// Largest matrix size for `hirota`.
pub const MAX_HIROTA_N: usize = 40;
/// Largest L for `tee` and `lgv --method det`.
pub const MAX_TEE_L: i64 = 60;

#[derive(Parser, Debug)]
#[command(name = "qkz", version, about = "Exact qKZ components, partial sums, T(L,p,k) and their combinatorics")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Det,
    Paths,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AsmClass {
    All,
    Vsasm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every component ψ_α at size L.
    Psi {
        #[arg(long = "L")]
        l: usize,
    },
    /// The partial sum S_±(L,p).
    Sums {
        #[arg(long = "L")]
        l: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "plus", allow_hyphen_values = true)]
        sign: Sign,
    },
    /// The determinant T(L,p,k).
    Tee {
        #[arg(long = "L", allow_hyphen_values = true)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Use the (p+1)×(p+1) form with the extra column.
        #[arg(long)]
        via_u: bool,
    },
    /// The τ²-determinant of a rational matrix read from JSON.
    Hirota {
        /// File with {"n": N, "entries": [["p/q", ...], ...]}; "-" for stdin.
        #[arg(long)]
        input: PathBuf,
        /// A rational "p/q", or "tau" / "tau-inv" for a symbolic result.
        #[arg(long, allow_hyphen_values = true)]
        tau2: String,
    },
    /// T(L,p,k) from nonintersecting lattice paths.
    Lgv {
        #[arg(long = "L")]
        l: i64,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
    },
    /// Enumerate alternating sign matrices.
    Asm {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = AsmClass::All)]
        class: AsmClass,
    },
    /// Fully packed loop counts by link pattern, or restricted to D_{L,p}.
    Fpl {
        #[arg(long = "L")]
        l: usize,
        #[arg(long)]
        p: Option<usize>,
    },
    /// The Γ-product for S(L,p) at τ = 1, in fixed point.
    Sfactor {
        #[arg(long = "L")]
        l: u32,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 256)]
        bits: u32,
    },
    /// Run a regression suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long = "max-L", default_value_t = 8)]
        max_l: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Budget(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "invalid input: {s}"),
            CliError::Budget(s) => write!(f, "refused: {s}"),
        }
    }
}

fn input<E: fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// The result of one command.
pub struct Outcome {
    pub json: Value,
    table: Table,
    pub ok: bool,
}

impl Outcome {
    fn value(json: Value, table: Table) -> Self {
        Outcome { json, table, ok: true }
    }
}

fn poly_table(label: &str, v: &impl fmt::Display) -> Table {
    let mut t = Table::new(&["", "value"]);
    t.row(vec![label.to_string(), v.to_string()]);
    t
}

fn set_threads() -> Result<(), CliError> {
    if let Ok(s) = std::env::var("QKZ_THREADS") {
        let n: usize = s.trim().parse().map_err(|_| CliError::Input(format!("QKZ_THREADS={s:?} is not a count")))?;
        // A pool may already exist when run is called twice in one process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Parse arguments, run the command, print, and return the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Err(e) = set_threads() {
        eprintln!("{e}");
        return 2;
    }
    let start = Instant::now();
    let result = execute(&cli.command);
    eprintln!("wall time {:.3?}", start.elapsed());
    match result {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
                Format::Table => out.table.render(),
            };
            println!("{text}");
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

/// Run a parsed command without printing.
pub fn run_to_outcome<I, T>(argv: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(input)?;
    execute(&cli.command)
}

fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Psi { l } => psi(*l),
        Command::Sums { l, p, sign } => sums(*l, *p, *sign),
        Command::Tee { l, p, k, via_u } => tee_cmd(*l, *p, *k, *via_u),
        Command::Hirota { input, tau2 } => hirota(input, tau2),
        Command::Lgv { l, p, k, method } => lgv(*l, *p, *k, *method),
        Command::Asm { size, class } => asm(*size, *class),
        Command::Fpl { l, p } => fpl(*l, *p),
        Command::Sfactor { l, p, bits } => sfactor_cmd(*l, *p, *bits),
        Command::Verify { suite, max_l, seed } => {
            let rep = if *suite == Suite::All { verify_all(*max_l, *seed)? } else { run_suite(*suite, *max_l, *seed)? };
            let mut t = Table::new(&["suite", "status", "checked", "skipped", "failed"]);
            let parts = rep.get("suites").and_then(Value::as_array).cloned().unwrap_or_else(|| vec![rep.clone()]);
            for r in &parts {
                let failed = r["failed"].as_array().map_or(0, Vec::len);
                t.row(vec![
                    r["suite"].as_str().unwrap_or("").to_string(),
                    if failed == 0 { "PASS" } else { "FAIL" }.to_string(),
                    r["checked"].to_string(),
                    r["skipped"].to_string(),
                    failed.to_string(),
                ]);
            }
            let ok = rep["failed"].as_array().is_some_and(Vec::is_empty);
            Ok(Outcome { json: rep, table: t, ok })
        }
    }
}

fn psi(l: usize) -> Result<Outcome, CliError> {
    if l > MAX_PSI_L {
        return Err(CliError::Budget(format!("psi for L={l} (max {MAX_PSI_L})")));
    }
    let v = solve_psi(l).map_err(input)?;
    let mut t = Table::new(&["alpha", "psi"]);
    for (a, p) in v.iter() {
        t.row(vec![a.steps(), p.to_string()]);
    }
    Ok(Outcome::value(v.to_json(), t))
}

fn sums(l: usize, p: usize, sign: Sign) -> Result<Outcome, CliError> {
    if l > MAX_PSI_L {
        return Err(CliError::Budget(format!("sums for L={l} (max {MAX_PSI_L})")));
    }
    let s = partial_sum(l, p, sign).map_err(input)?;
    let mut json = s.to_json();
    json["L"] = json!(l);
    json["p"] = json!(p);
    json["sign"] = json!(sign.to_string());
    Ok(Outcome::value(json, poly_table(&format!("S_{sign}({l},{p})"), &s)))
}

fn tee_cmd(l: i64, p: i64, k: i64, via_u: bool) -> Result<Outcome, CliError> {
    if l > MAX_TEE_L || p > MAX_TEE_L || k.abs() > 4 * MAX_TEE_L || l < -MAX_TEE_L {
        return Err(CliError::Budget(format!("tee arguments beyond |{MAX_TEE_L}|")));
    }
    let v = if via_u { tee_via_u(l, p, k) } else { tee(l, p, k) };
    let mut json = v.to_json();
    json["L"] = json!(l);
    json["p"] = json!(p);
    json["k"] = json!(k);
    Ok(Outcome::value(json, poly_table(&format!("T({l},{p},{k})"), &v)))
}

fn parse_matrix(v: &Value) -> Result<Matrix<BigRational>, CliError> {
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| CliError::Input("missing integer \"n\"".into()))? as usize;
    if n > MAX_HIROTA_N {
        return Err(CliError::Budget(format!("hirota for n={n} (max {MAX_HIROTA_N})")));
    }
    let rows = v.get("entries").and_then(Value::as_array).ok_or_else(|| CliError::Input("missing \"entries\"".into()))?;
    if rows.len() != n {
        return Err(CliError::Input(format!("expected {n} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let cells = row.as_array().ok_or_else(|| CliError::Input(format!("row {i} is not an array")))?;
        if cells.len() != n {
            return Err(CliError::Input(format!("row {i} has {} entries, expected {n}", cells.len())));
        }
        let parsed = cells
            .iter()
            .map(|c| {
                let s = match c {
                    Value::String(s) => s.clone(),
                    Value::Number(x) if x.is_i64() => x.to_string(),
                    _ => return None,
                };
                parse_rational(&s)
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| CliError::Input(format!("row {i}: entries must be rationals \"p/q\"")))?;
        out.push(parsed);
    }
    Matrix::from_rows(out).map_err(input)
}

fn hirota(path: &PathBuf, tau2: &str) -> Result<Outcome, CliError> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(input)?
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    let v: Value = serde_json::from_str(&text).map_err(input)?;
    let a = parse_matrix(&v)?;
    let symbolic = match tau2.trim() {
        "tau" | "τ" => Some(1),
        "tau-inv" | "τ^-1" => Some(-1),
        _ => None,
    };
    match symbolic {
        Some(e) => {
            let m = Matrix::from_fn(a.rows(), a.cols(), |i, j| QTauPoly::constant(a.get(i, j).clone()));
            let d = tau2_det(&m, &QTauPoly::tau_pow(e)).map_err(input)?;
            Ok(Outcome::value(json!({"n": a.rows(), "tau2": tau2, "value": d.to_json()}), poly_table("det", &d)))
        }
        None => {
            let t = parse_rational(tau2).ok_or_else(|| CliError::Input(format!("--tau2 {tau2:?}: expected p/q, tau or tau-inv")))?;
            let d = tau2_det(&a, &t).map_err(input)?;
            let s = format_rational(&d);
            Ok(Outcome::value(json!({"n": a.rows(), "tau2": format_rational(&t), "value": s}), poly_table("det", &s)))
        }
    }
}

fn lgv(l: i64, p: i64, k: i64, method: Method) -> Result<Outcome, CliError> {
    if p < 0 || k < 0 || l - 2 * p - k < 0 {
        return Err(CliError::Input(format!("need p, k, L−2p−k ≥ 0, got L={l}, p={p}, k={k}")));
    }
    let v: TauPoly = match method {
        Method::Det => {
            if l > MAX_TEE_L {
                return Err(CliError::Budget(format!("lgv for L={l} (max {MAX_TEE_L})")));
            }
            lgv_tee(l, p, k)
        }
        Method::Paths => path_count(l, p, k).map_err(|e| CliError::Budget(e.to_string()))?,
    };
    let mut json = v.to_json();
    json["L"] = json!(l);
    json["p"] = json!(p);
    json["k"] = json!(k);
    json["method"] = json!(format!("{method:?}").to_lowercase());
    Ok(Outcome::value(json, poly_table(&format!("T({l},{p},{k})"), &v)))
}

fn combin_err(e: crate::combin::CombinError) -> CliError {
    use crate::combin::CombinError::*;
    match e {
        Budget(s) => CliError::Budget(s),
        other => CliError::Input(other.to_string()),
    }
}

fn asm(size: usize, class: AsmClass) -> Result<Outcome, CliError> {
    match class {
        AsmClass::All => {
            let all = enumerate_asm(size).map_err(|e| CliError::Budget(e.to_string()))?;
            let mut by_neg = std::collections::BTreeMap::<usize, usize>::new();
            for b in &all {
                *by_neg.entry(count_negatives(b)).or_default() += 1;
            }
            let mut t = Table::new(&["negatives", "count"]);
            for (k, n) in &by_neg {
                t.row(vec![k.to_string(), n.to_string()]);
            }
            t.row(vec!["total".into(), all.len().to_string()]);
            let dist: Vec<Value> = by_neg.iter().map(|(k, n)| json!([k, n])).collect();
            Ok(Outcome::value(json!({"size": size, "class": "all", "count": all.len(), "by_negatives": dist}), t))
        }
        AsmClass::Vsasm => {
            let all = enumerate_vsasm(size).map_err(combin_err)?;
            let g = vsasm_generating_function(size).map_err(combin_err)?;
            let mut t = Table::new(&["", "value"]);
            t.row(vec!["count".into(), all.len().to_string()]);
            t.row(vec!["generating function".into(), g.to_string()]);
            Ok(Outcome::value(
                json!({"size": size, "class": "vsasm", "count": all.len(), "generating_function": g.to_json()}),
                t,
            ))
        }
    }
}

fn fpl(l: usize, p: Option<usize>) -> Result<Outcome, CliError> {
    if let Some(p) = p {
        let n = p_restricted_count(l, p).map_err(combin_err)?;
        return Ok(Outcome::value(json!({"L": l, "p": p, "count": n}), poly_table(&format!("FPL in D({l},{p})"), &n)));
    }
    let counts = enumerate_fpl(l).map_err(combin_err)?;
    let mut t = Table::new(&["alpha", "link pattern", "count"]);
    let mut obj = serde_json::Map::new();
    for (a, n) in &counts {
        t.row(vec![a.steps(), LinkPattern::from_dyck(a).to_parens(), n.to_string()]);
        obj.insert(a.steps(), json!(n));
    }
    let total: u64 = counts.values().sum();
    t.row(vec!["total".into(), String::new(), total.to_string()]);
    Ok(Outcome::value(json!({"L": l, "total": total, "counts": obj}), t))
}

fn sfactor_cmd(l: u32, p: u32, bits: u32) -> Result<Outcome, CliError> {
    let s = sfactor(l, p, bits).map_err(combin_err)?;
    let digits = (bits as f64 * std::f64::consts::LOG10_2) as usize;
    let value = s.to_decimal(digits);
    let bound = format!("1e{}", s.rel_error_log10().ceil() as i64);
    let mut t = Table::new(&["", "value"]);
    t.row(vec![format!("sfactor({l},{p})"), value.clone()]);
    t.row(vec!["nearest integer".into(), s.nearest_integer().to_string()]);
    t.row(vec!["relative error bound".into(), bound.clone()]);
    Ok(Outcome::value(
        json!({"L": l, "p": p, "bits": bits, "value": value, "nearest_integer": s.nearest_integer().to_string(), "rel_error_bound": bound}),
        t,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> Value {
        let mut v = vec!["qkz"];
        v.extend_from_slice(args);
        run_to_outcome(v).unwrap().json
    }

    #[test]
    fn documented_examples() {
        let s = out(&["sums", "--L", "6", "--p", "2", "--sign", "plus"]);
        assert_eq!(s["terms"], json!([[0, "1"], [2, "8"], [4, "12"], [6, "5"]]));
        let t = out(&["tee", "--L", "4", "--p", "0", "--k", "1"]);
        assert_eq!(t["terms"], json!([[0, "1"]]));
        let f = out(&["fpl", "--L", "6", "--p", "2"]);
        assert_eq!(f["count"], json!(26));
        let a = out(&["asm", "--size", "5", "--class", "vsasm"]);
        assert_eq!(a["count"], json!(3));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["qkz", "--bogus"]), 2);
        assert_eq!(run(["qkz", "psi", "--L", "99"]), 2);
        assert_eq!(run(["qkz", "fpl", "--L", "12"]), 2);
        assert_eq!(run(["qkz", "tee", "--L", "6", "--p", "2", "--k", "1"]), 0);
    }
}
