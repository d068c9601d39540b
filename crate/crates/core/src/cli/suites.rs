//! Named regression suites, their size budgets, and the combined run.

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::combin::{verify_fpl, verify_lgv, verify_prop4_lines, verify_residues, verify_sfactor, verify_vsasm, p_restricted_count};
use crate::hirota::{tee_stencil, verify_asm_oracle, verify_ordinary_det, verify_symbolic};
use crate::qkz::{check_eps_classes, partial_sum, solve_psi, Sign};
use crate::report::Report;
use crate::ring::verify_ring_properties;
use crate::tee::{verify_lemma2, verify_lemma3, verify_prop1, verify_sdet, verify_sdet_general, verify_trecur};

use super::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    All,
    /// Partial sums against the determinant family.
    Prop1,
    /// Closed determinant forms of S(L,p|t).
    Sdet,
    /// ε-classes of paths and the constant-c property.
    Lemma1,
    /// The antisymmetrization identity, symbolically.
    Lemma2,
    /// The bilinear recurrence for T.
    Trecur,
    /// det U = det T.
    Lemma3,
    /// T read on the octahedron lattice.
    Hirota,
    /// τ²-determinant at τ² = −1 against the ordinary determinant.
    Orddet,
    /// τ²-determinant against the ASM expansion.
    Asmoracle,
    /// τ²-determinant of a generic matrix, symbolically.
    Symbolic,
    /// T against lattice-path sums.
    Lgv,
    /// VSASM generating function and its companion identities.
    Vsasm,
    /// FPL counts against ψ at τ = 1.
    Fpl,
    /// The Γ-product against S at τ = 1.
    Sfactor,
    /// The three residue identities.
    Residues,
    /// Ring axioms, Plücker relation, q-number limit.
    Ring,
}

/// Largest max-L each suite accepts. Suites without an L parameter use fixed
/// sizes and accept any value.
pub const BUDGETS: &[(Suite, usize)] = &[
    (Suite::Prop1, 12),
    (Suite::Sdet, 12),
    (Suite::Lemma1, 10),
    (Suite::Lemma2, 8),
    (Suite::Trecur, 24),
    (Suite::Lemma3, 24),
    (Suite::Hirota, 16),
    (Suite::Lgv, 12),
    (Suite::Vsasm, 10),
    (Suite::Fpl, 9),
    (Suite::Sfactor, 20),
];

pub fn budget(s: Suite) -> Option<usize> {
    BUDGETS.iter().find(|(t, _)| *t == s).map(|&(_, b)| b)
}

const ALL: [Suite; 16] = [
    Suite::Ring,
    Suite::Prop1,
    Suite::Sdet,
    Suite::Lemma1,
    Suite::Lemma2,
    Suite::Trecur,
    Suite::Lemma3,
    Suite::Hirota,
    Suite::Orddet,
    Suite::Asmoracle,
    Suite::Symbolic,
    Suite::Lgv,
    Suite::Vsasm,
    Suite::Fpl,
    Suite::Sfactor,
    Suite::Residues,
];

fn internal<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn lemma1(l_max: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("lemma1");
    for l in 2..=l_max {
        let psi = solve_psi(l).map_err(internal)?;
        let r = check_eps_classes(&psi).map_err(internal)?;
        rep.checked += r.checked.saturating_sub(r.failures.len());
        for f in r.failures {
            rep.check(json!({"L": l, "detail": f}), false, || ("class sum".into(), "differs".into()));
        }
    }
    Ok(rep.with_ranges(json!({"L": [2, l_max]})))
}

fn fpl(l_max: usize) -> Result<Report, CliError> {
    let mut rep = verify_fpl(4, l_max).map_err(internal)?;
    for l in 4..=l_max {
        for p in 0..=(l - 1) / 2 {
            let n = p_restricted_count(l, p).map_err(internal)?;
            let s = partial_sum(l, p, Sign::Plus).map_err(internal)?.at_one();
            rep.compare(json!({"L": l, "p": p, "restricted": true}), &s, &num_bigint::BigInt::from(n));
        }
    }
    Ok(rep)
}

/// Run one suite with the given size and seed. Asking for more than the
/// suite's budget is refused.
pub fn run_suite(suite: Suite, max_l: usize, seed: u64) -> Result<Value, CliError> {
    if let Some(b) = budget(suite) {
        if max_l > b {
            return Err(CliError::Budget(format!("suite {suite:?} with max-L {max_l} (budget {b})")));
        }
    }
    let l = max_l;
    let rep = match suite {
        Suite::All => return verify_all(max_l, seed),
        Suite::Prop1 => verify_prop1(l).map_err(internal)?,
        Suite::Sdet => {
            let mut r = verify_sdet(l).map_err(internal)?;
            r.absorb(verify_sdet_general(l, 3, seed).map_err(internal)?);
            r
        }
        Suite::Lemma1 => lemma1(l)?,
        Suite::Lemma2 => verify_lemma2((l / 2).clamp(1, 4)),
        Suite::Trecur => verify_trecur(l as i64),
        Suite::Lemma3 => verify_lemma3(l as i64),
        Suite::Hirota => tee_stencil(l as i64),
        Suite::Orddet => verify_ordinary_det(&[2, 3, 4, 5], 100, seed).map_err(internal)?,
        Suite::Asmoracle => verify_asm_oracle(&[2, 3, 4], 50, seed).map_err(internal)?,
        Suite::Symbolic => verify_symbolic(&[2, 3, 4, 5]).map_err(internal)?,
        Suite::Lgv => verify_lgv(l as i64),
        Suite::Vsasm => {
            let mut r = verify_vsasm((l / 2).min(4)).map_err(internal)?;
            r.absorb(verify_prop4_lines((l / 2).max(2)).map_err(internal)?);
            r
        }
        Suite::Fpl => fpl(l)?,
        Suite::Sfactor => verify_sfactor(l as u32, 256, -20.0, l.min(10) as u32).map_err(internal)?,
        Suite::Residues => verify_residues(100, seed),
        Suite::Ring => verify_ring_properties(200, seed),
    };
    let mut v = rep.to_json();
    v["suite"] = json!(format!("{suite:?}").to_lowercase());
    Ok(v)
}

/// Every suite, each at min(max_l, its budget).
pub fn verify_all(max_l: usize, seed: u64) -> Result<Value, CliError> {
    let mut parts = Vec::new();
    let (mut checked, mut skipped, mut failed) = (0u64, 0u64, Vec::new());
    for s in ALL {
        let l = budget(s).map_or(max_l, |b| max_l.min(b));
        let start = std::time::Instant::now();
        let r = run_suite(s, l, seed)?;
        eprintln!("{:<10} {:.2?}", format!("{s:?}").to_lowercase(), start.elapsed());
        checked += r["checked"].as_u64().unwrap_or(0);
        skipped += r["skipped"].as_u64().unwrap_or(0);
        for f in r["failed"].as_array().into_iter().flatten() {
            let mut f = f.clone();
            f["suite"] = r["suite"].clone();
            failed.push(f);
        }
        parts.push(r);
    }
    Ok(json!({
        "suite": "all",
        "ranges": {"max_L": max_l, "seed": seed},
        "checked": checked,
        "skipped": skipped,
        "failed": failed,
        "suites": parts,
    }))
}
