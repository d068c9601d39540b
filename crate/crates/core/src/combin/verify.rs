//! Sweeps comparing each combinatorial model with the algebraic side.

use num_bigint::BigInt;
use serde_json::json;

use crate::qkz::{partial_sum, partial_sum_with, solve_psi, QkzError, Sign};
use crate::report::Report;
use crate::tee::{prop1_k, tee};

use super::{enumerate_fpl, lgv_tee, path_count, sfactor, vsasm_generating_function, CombinError, PATH_BUDGET};

/// T(L,p,k) against the Cauchy–Binet path sum for every admissible (p, k) with
/// L ≤ l_max, and against direct path enumeration where that fits the budget.
pub fn verify_lgv(l_max: i64) -> Report {
    let mut rep = Report::new("lgv");
    for l in 1..=l_max {
        for p in 1..=l / 2 {
            for k in 0..=l - 2 * p {
                let t = tee(l, p, k);
                let params = json!({"L": l, "p": p, "k": k});
                rep.compare(params.clone(), &t, &lgv_tee(l, p, k));
                if p * (p + k.max(l - 2 * p - k)) <= PATH_BUDGET {
                    if let Ok(pc) = path_count(l, p, k) {
                        rep.compare(json!({"L": l, "p": p, "k": k, "method": "paths"}), &t, &pc);
                    }
                }
            }
        }
    }
    rep.with_ranges(json!({"L": [1, l_max]}))
}

/// FPL counts per link pattern against ψ_α at τ = 1.
pub fn verify_fpl(l_min: usize, l_max: usize) -> Result<Report, CombinError> {
    let mut rep = Report::new("fpl");
    for l in l_min..=l_max {
        let counts = enumerate_fpl(l)?;
        let psi = solve_psi(l).map_err(qkz_err)?;
        for (a, v) in psi.iter() {
            let n = BigInt::from(counts.get(a).copied().unwrap_or(0));
            rep.compare(json!({"L": l, "alpha": a.steps()}), &v.at_one(), &n);
        }
        let extra = counts.keys().filter(|a| psi.get(a).is_none()).count();
        rep.check(json!({"L": l, "unknown_patterns": extra}), extra == 0, || ("0".into(), extra.to_string()));
    }
    Ok(rep.with_ranges(json!({"L": [l_min, l_max]})))
}

fn qkz_err(e: QkzError) -> CombinError {
    CombinError::Internal(e.to_string())
}

/// The VSASM generating function of size 2n+1 against T(2n, n−1, 2).
pub fn verify_vsasm(n_max: usize) -> Result<Report, CombinError> {
    let mut rep = Report::new("vsasm");
    for n in 1..=n_max {
        let g = vsasm_generating_function(2 * n + 1)?;
        let n = n as i64;
        rep.compare(json!({"n": n}), &tee(2 * n, n - 1, 2), &g);
    }
    Ok(rep.with_ranges(json!({"n": [1, n_max]})))
}

/// T(2n, n−1, 1) = S_+(2n, n−1) and T(2n−1, n−1, 1) = τ^{n−1} S_−(2n−1, n−1) for 2 ≤ n ≤ n_max.
pub fn verify_prop4_lines(n_max: usize) -> Result<Report, CombinError> {
    let mut rep = Report::new("vsasm_lines");
    for n in 2..=n_max {
        let ni = n as i64;
        let even = partial_sum(2 * n, n - 1, Sign::Plus).map_err(qkz_err)?;
        rep.compare(json!({"line": 2, "n": n}), &tee(2 * ni, ni - 1, 1), &even);
        let odd = partial_sum(2 * n - 1, n - 1, Sign::Minus).map_err(qkz_err)?.shift(ni as i32 - 1);
        rep.compare(json!({"line": 3, "n": n}), &tee(2 * ni - 1, ni - 1, 1), &odd);
    }
    Ok(rep.with_ranges(json!({"n": [2, n_max]})))
}

/// The Γ-product against T(L, p, ⌊L/2⌋−p+1) at τ = 1, which is S_±(L,p) at
/// τ = 1. Passes when both the measured error and the computed bound are
/// below 10^{tol_log10}; for L ≤ l_partial also compares with the partial sum itself.
pub fn verify_sfactor(l_max: u32, bits: u32, tol_log10: f64, l_partial: u32) -> Result<Report, CombinError> {
    let mut rep = Report::new("sfactor");
    let tol = tol_log10 / std::f64::consts::LOG10_2;
    for l in 1..=l_max {
        let psi = if (2..=l_partial).contains(&l) { Some(solve_psi(l as usize).map_err(qkz_err)?) } else { None };
        for p in 0..=(l - 1) / 2 {
            let (li, pi) = (l as i64, p as i64);
            let exact = tee(li, pi, prop1_k(li, pi, Sign::Minus)).at_one();
            let s = sfactor(l, p, bits)?;
            let measured = s.rel_error_log2_to(&exact);
            let params = json!({"L": l, "p": p, "bits": bits});
            rep.check(params.clone(), measured < tol && s.rel_error_log2 < tol, || {
                (exact.to_string(), format!("{} (err 2^{measured:.1}, bound 2^{:.1})", s.to_decimal(30), s.rel_error_log2))
            });
            if let Some(psi) = &psi {
                for sign in [Sign::Plus, Sign::Minus] {
                    let ps = partial_sum_with(psi, p as usize, sign).map_err(qkz_err)?.at_one();
                    rep.compare(json!({"L": l, "p": p, "sign": sign.to_string()}), &exact, &ps);
                }
            }
        }
    }
    Ok(rep.with_ranges(json!({"L": [1, l_max], "bits": bits, "tol_log10": tol_log10})))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps() {
        let r = verify_lgv(8);
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_vsasm(3).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_prop4_lines(4).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_sfactor(9, 128, -20.0, 6).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
    }
}
