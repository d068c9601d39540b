//! Randomized and symbolic checks of the τ²-determinant, and a stencil walker
//! that tests the recurrence on any lattice function.

use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::report::Report;
use crate::ring::{format_rational, rat, BigRational, Matrix, Ring, SparsePoly, TauPoly};
use crate::tee::{from_hirota_coords, TeeParams};

use super::{asm_expansion, count_negatives, enumerate_asm, inversions, tau2_det, HirotaError};

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=9);
    rat(num, den)
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<BigRational> {
    Matrix::from_fn(n, n, |_, _| random_rational(rng))
}

fn show(a: &Matrix<BigRational>) -> String {
    let rows: Vec<String> =
        (0..a.rows()).map(|i| a.row(i).iter().map(format_rational).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

/// Draw until `f` succeeds without a degenerate division; give up after many tries.
fn sample<T>(
    rng: &mut ChaCha8Rng,
    mut f: impl FnMut(&mut ChaCha8Rng) -> Result<T, HirotaError>,
) -> Result<T, HirotaError> {
    let mut last = None;
    for _ in 0..1000 {
        match f(rng) {
            Err(e @ HirotaError::Degenerate { .. }) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}

/// At τ² = −1 the recurrence reproduces the ordinary determinant.
pub fn verify_ordinary_det(sizes: &[usize], trials: usize, seed: u64) -> Result<Report, HirotaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("orddet");
    let minus_one = rat(-1, 1);
    for &n in sizes {
        for _ in 0..trials {
            let (a, got) = sample(&mut rng, |rng| {
                let a = random_matrix(rng, n);
                let d = tau2_det(&a, &minus_one)?;
                Ok((a, d))
            })?;
            let want = a.det()?;
            rep.compare(json!({"n": n, "matrix": show(&a)}), &want, &got);
        }
    }
    Ok(rep.with_ranges(json!({"sizes": sizes, "trials": trials, "seed": seed})))
}

/// The recurrence against the ASM expansion at random (matrix, λ).
pub fn verify_asm_oracle(sizes: &[usize], trials: usize, seed: u64) -> Result<Report, HirotaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("asmoracle");
    for &n in sizes {
        for _ in 0..trials {
            let (a, lam, got) = sample(&mut rng, |rng| {
                let a = random_matrix(rng, n);
                let lam = random_rational(rng);
                if lam == rat(0, 1) {
                    return Err(HirotaError::Degenerate { n: 0, i: 0, j: 0 });
                }
                let d = tau2_det(&a, &lam)?;
                Ok((a, lam, d))
            })?;
            let want = asm_expansion(&a, &lam)?;
            rep.compare(json!({"n": n, "lambda": format_rational(&lam), "matrix": show(&a)}), &want, &got);
        }
    }
    Ok(rep.with_ranges(json!({"sizes": sizes, "trials": trials, "seed": seed})))
}

/// Run the recurrence on an n×n matrix of independent variables x_ij with
/// symbolic τ²; every division must be exact. Returns the τ²-determinant and
/// the ASM expansion computed independently in the same ring.
pub fn symbolic_exactness(n: usize) -> Result<(SparsePoly, SparsePoly), HirotaError> {
    let a = Matrix::from_fn(n, n, |i, j| SparsePoly::var(i * n + j));
    let tau2 = SparsePoly::constant(TauPoly::tau_pow(2));
    let det = tau2_det(&a, &tau2)?;

    let shift = TauPoly::one() + TauPoly::tau_pow(-2);
    let mut expansion = SparsePoly::zero();
    for b in enumerate_asm(n)? {
        let mut e = vec![0i32; n * n];
        for i in 0..n {
            for j in 0..n {
                e[i * n + j] = b.get(i, j) as i32;
            }
        }
        let coeff = &TauPoly::tau_pow(2 * inversions(&b) as i32) * &shift.pow(count_negatives(&b) as u32);
        expansion = expansion.add(&SparsePoly::monomial(e, coeff));
    }
    Ok((det, expansion))
}

pub fn verify_symbolic(sizes: &[usize]) -> Result<Report, HirotaError> {
    let mut rep = Report::new("symbolic");
    for &n in sizes {
        let (det, exp) = symbolic_exactness(n)?;
        rep.check(json!({"n": n}), det == exp, || {
            (format!("{} ASM terms", exp.num_terms()), format!("{} terms, unequal", det.num_terms()))
        });
    }
    Ok(rep.with_ranges(json!({"sizes": sizes})))
}

/// Test f(n,i,j)f(n−2,i,j) = f(n−1,i−1,j)f(n−1,i+1,j) + τ²f(n−1,i,j−1)f(n−1,i,j+1)
/// at each anchor. Anchors where `f` is undefined at any of the six points are
/// skipped.
pub fn check_stencil<T, F>(suite: &str, f: F, tau2: &T, anchors: &[(i64, i64, i64)]) -> Report
where
    T: Ring + Display,
    F: Fn(i64, i64, i64) -> Option<T> + Sync,
{
    let parts: Vec<Report> = anchors
        .par_iter()
        .map(|&(n, i, j)| {
            let mut rep = Report::new(suite);
            let pts = [(n, i, j), (n - 2, i, j), (n - 1, i - 1, j), (n - 1, i + 1, j), (n - 1, i, j - 1), (n - 1, i, j + 1)];
            let vals: Option<Vec<T>> = pts.iter().map(|&(a, b, c)| f(a, b, c)).collect();
            match vals {
                None => rep.skip(),
                Some(v) => {
                    let lhs = v[0].mul(&v[1]);
                    let rhs = v[2].mul(&v[3]).add(&tau2.mul(&v[4].mul(&v[5])));
                    rep.compare(json!({"n": n, "i": i, "j": j}), &lhs, &rhs);
                }
            }
            rep
        })
        .collect();
    let mut out = Report::new(suite);
    for r in parts {
        out.absorb(r);
    }
    out
}

/// T(L,p,k) read in lattice coordinates, tested with [`check_stencil`] at every
/// anchor whose six points are admissible with L ≤ l_max.
pub fn tee_stencil(l_max: i64) -> Report {
    let f = |n: i64, i: i64, j: i64| {
        let (l, p, k) = from_hirota_coords(n, i, j);
        let t = TeeParams::new(l, p, k);
        (l <= l_max && t.is_admissible()).then(|| t.value())
    };
    let anchors: Vec<(i64, i64, i64)> = (0..=l_max)
        .flat_map(|n| (-l_max..=l_max).flat_map(move |i| (0..=l_max).map(move |j| (n, i, j))))
        .collect();
    check_stencil("hirota_t", f, &TauPoly::tau_pow(2), &anchors).with_ranges(json!({"L": [0, l_max]}))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_small() {
        let r = verify_ordinary_det(&[2, 3, 4], 10, 1).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
        let r = verify_asm_oracle(&[2, 3, 4], 10, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
    }

    #[test]
    fn symbolic_three() {
        let r = verify_symbolic(&[2, 3]).unwrap();
        assert!(r.passed(), "{:?}", r.failed);
    }

    #[test]
    fn tee_on_the_lattice() {
        let r = tee_stencil(9);
        assert!(r.passed() && r.checked > 20, "{:?}", r.failed);
    }
}
