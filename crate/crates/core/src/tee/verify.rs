//! Exhaustive sweeps of the identities satisfied by T(L,p,k) and S(L,p|t).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::qkz::{partial_sum_eps, partial_sum_with, solve_psi, Sign};
use crate::report::Report;
use crate::ring::{rat, QTauPoly, SparsePoly, TauPoly};

use super::{lemma2_sides, nu_int, prop1_k, s_det, s_det_sign, tee, tee_via_u, TeeError, TeeParams};

fn merge(suite: &str, parts: Vec<Report>) -> Report {
    let mut out = Report::new(suite);
    for r in parts {
        out.absorb(r);
    }
    out
}

/// S_±(L,p) = τ^ν T(L, p, ⌊L/2⌋ − p + {0, 1}) for 4 ≤ L ≤ l_max and every p.
pub fn verify_prop1(l_max: usize) -> Result<Report, TeeError> {
    let parts = (4..=l_max)
        .into_par_iter()
        .map(|l| -> Result<Report, TeeError> {
            let mut rep = Report::new("prop1");
            let psi = solve_psi(l)?;
            let li = l as i64;
            for p in 0..=(l - 1) / 2 {
                let nu = nu_int(li, p as i64)?;
                for sign in [Sign::Plus, Sign::Minus] {
                    let s = partial_sum_with(&psi, p, sign)?;
                    let k = prop1_k(li, p as i64, sign);
                    let t = tee(li, p as i64, k).shift(nu);
                    rep.compare(json!({"L": l, "p": p, "sign": sign.to_string(), "k": k}), &s, &t);
                }
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(merge("prop1", parts).with_ranges(json!({"L": [4, l_max]})))
}

/// The six arguments of the bilinear recurrence anchored at (L,p,k), in the order
/// T(L,p,k), T(L−2,p−2,k+2), T(L−1,p−2,k+2), T(L−1,p,k), T(L−2,p−1,k), T(L,p−1,k+2).
pub fn trecur_points(l: i64, p: i64, k: i64) -> [TeeParams; 6] {
    [
        TeeParams::new(l, p, k),
        TeeParams::new(l - 2, p - 2, k + 2),
        TeeParams::new(l - 1, p - 2, k + 2),
        TeeParams::new(l - 1, p, k),
        TeeParams::new(l - 2, p - 1, k),
        TeeParams::new(l, p - 1, k + 2),
    ]
}

/// T(L,p,k)T(L−2,p−2,k+2) = T(L−1,p−2,k+2)T(L−1,p,k) + τ²T(L−2,p−1,k)T(L,p−1,k+2)
/// for L ≤ l_max, p ≥ 2, 0 ≤ k ≤ L. Anchors where some argument has a negative
/// p, k or k′ are skipped.
pub fn verify_trecur(l_max: i64) -> Report {
    let anchors: Vec<(i64, i64, i64)> =
        (0..=l_max).flat_map(|l| (2..=l / 2 + 1).flat_map(move |p| (0..=l).map(move |k| (l, p, k)))).collect();
    let parts: Vec<Report> = anchors
        .par_iter()
        .map(|&(l, p, k)| {
            let mut rep = Report::new("trecur");
            let pts = trecur_points(l, p, k);
            if !pts.iter().all(TeeParams::is_admissible) {
                rep.skip();
                return rep;
            }
            let v: Vec<TauPoly> = pts.iter().map(TeeParams::value).collect();
            let lhs = &v[0] * &v[1];
            let rhs = &(&v[2] * &v[3]) + (&(&v[4] * &v[5]).shift(2));
            rep.compare(json!({"L": l, "p": p, "k": k}), &lhs, &rhs);
            rep
        })
        .collect();
    merge("trecur", parts).with_ranges(json!({"L": [0, l_max], "p": ">=2", "k": "0..=L"}))
}

/// det U = det T for L ≤ l_max, all p ≥ 0 and k with k, k′ ≥ 0.
pub fn verify_lemma3(l_max: i64) -> Report {
    let cases: Vec<TeeParams> = (0..=l_max)
        .flat_map(|l| (0..=l / 2).flat_map(move |p| (0..=l - 2 * p).map(move |k| TeeParams::new(l, p, k))))
        .collect();
    let parts: Vec<Report> = cases
        .par_iter()
        .map(|c| {
            let mut rep = Report::new("lemma3");
            rep.compare(json!({"L": c.l, "p": c.p, "k": c.k}), &c.value(), &tee_via_u(c.l, c.p, c.k));
            rep
        })
        .collect();
    merge("lemma3", parts).with_ranges(json!({"L": [0, l_max]}))
}

/// The simplified determinants at t = τ^{±1} and the general-t determinant at
/// the same points against the path sums S_±(L,p), for 2 ≤ L ≤ l_max.
pub fn verify_sdet(l_max: usize) -> Result<Report, TeeError> {
    let parts = (2..=l_max)
        .into_par_iter()
        .map(|l| -> Result<Report, TeeError> {
            let mut rep = Report::new("sdet");
            let psi = solve_psi(l)?;
            for p in 0..=(l - 1) / 2 {
                for (sign, e) in [(Sign::Plus, 1), (Sign::Minus, -1)] {
                    let want = partial_sum_with(&psi, p, sign)?;
                    let params = json!({"L": l, "p": p, "sign": sign.to_string()});
                    rep.compare(params.clone(), &want, &s_det_sign(l, p, sign)?);
                    let general = s_det(l, p, &TauPoly::tau_pow(e).to_rational_coeffs())?;
                    rep.compare(params, &want.to_rational_coeffs(), &general);
                }
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(merge("sdet", parts).with_ranges(json!({"L": [2, l_max]})))
}

/// The general-t determinant against the ε-sum S(L,p|t) at random rational t.
pub fn verify_sdet_general(l_max: usize, trials: usize, seed: u64) -> Result<Report, TeeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("sdet_t");
    for l in 2..=l_max {
        for p in 0..=(l - 1) / 2 {
            for _ in 0..trials {
                let num: i64 = rng.gen_range(-50..=50);
                let den: i64 = rng.gen_range(1..=50);
                let t = QTauPoly::constant(rat(num, den));
                let want = partial_sum_eps(l, p, &t)?;
                let got = s_det(l, p, &t)?;
                rep.compare(json!({"L": l, "p": p, "t": format!("{num}/{den}")}), &want, &got);
            }
        }
    }
    Ok(rep.with_ranges(json!({"L": [2, l_max], "trials": trials, "seed": seed})))
}

/// Both equalities of the truncated antisymmetrization identity for 1 ≤ p ≤ p_max.
pub fn verify_lemma2(p_max: usize) -> Report {
    let mut rep = Report::new("lemma2");
    for p in 1..=p_max {
        let (lhs, mid, rhs) = lemma2_sides(p);
        let sizes = |a: &SparsePoly, b: &SparsePoly| (format!("{} terms", a.num_terms()), format!("{} terms, unequal", b.num_terms()));
        let (e, a) = sizes(&lhs, &mid);
        rep.check(json!({"p": p, "side": "truncated = AS"}), lhs == mid, || (e, a));
        let (e, a) = sizes(&mid, &rhs);
        rep.check(json!({"p": p, "side": "AS = product"}), mid == rhs, || (e, a));
    }
    rep.with_ranges(json!({"p": [1, p_max]}))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_small() {
        let r = verify_prop1(7).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_trecur(8);
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_lemma3(8);
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_sdet(7).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_sdet_general(6, 2, 7).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_lemma2(3);
        assert!(r.passed(), "{:?}", r.failed);
    }
}
