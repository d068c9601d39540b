//! The determinant family T(L,p,k) and the determinant forms of the partial
//! sums S(L,p|t).
//!
//! T(L,p,k) = det_{1≤ℓ,m≤p} Σ_r C(ℓ+k−1, r−ℓ) C(m+k′, 2m−r) τ^{2(2m−r)} with
//! k′ = L − 2p − k, and binomials vanishing outside 0 ≤ r ≤ n.

mod antisym;
mod verify;

pub use antisym::{antisymmetrize, lemma2_sides, permutations_with_sign};
pub use verify::{
    trecur_points, verify_lemma2, verify_lemma3, verify_prop1, verify_sdet, verify_sdet_general,
    verify_trecur,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::qkz::{ptilde, QkzError, Sign};
use crate::ring::{binomial, Matrix, QTauPoly, RingError, TauPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TeeError {
    #[error("ν({l},{p}) = {nu} is not an integer")]
    NonIntegralNu { l: i64, p: i64, nu: String },
    #[error(transparent)]
    Qkz(#[from] QkzError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// (L, p, k) together with the derived k′ = L − 2p − k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TeeParams {
    pub l: i64,
    pub p: i64,
    pub k: i64,
}

impl TeeParams {
    pub fn new(l: i64, p: i64, k: i64) -> Self {
        TeeParams { l, p, k }
    }

    pub fn kprime(&self) -> i64 {
        self.l - 2 * self.p - self.k
    }

    /// p, k and k′ all nonnegative.
    pub fn is_admissible(&self) -> bool {
        self.p >= 0 && self.k >= 0 && self.kprime() >= 0
    }

    pub fn value(&self) -> TauPoly {
        tee(self.l, self.p, self.k)
    }
}

fn det(m: Matrix<TauPoly>) -> TauPoly {
    // Square by construction and Bareiss divisions are exact over Z[τ, τ⁻¹].
    m.det().expect("square matrix with exact Bareiss steps")
}

/// T(L,p,k) by its defining p×p determinant. T = 1 for p ≤ 0.
pub fn tee(l: i64, p: i64, k: i64) -> TauPoly {
    if p <= 0 {
        return TauPoly::one();
    }
    let kp = l - 2 * p - k;
    let n = p as usize;
    det(Matrix::from_fn(n, n, |i, j| tee_entry(i as i64 + 1, j as i64 + 1, k, kp)))
}

/// T_{ℓm}(k,k′) = Σ_r C(ℓ+k−1, 2m−ℓ−r) C(m+k′, r) τ^{2r}.
pub fn tee_entry(l: i64, m: i64, k: i64, kp: i64) -> TauPoly {
    let hi = (m + kp).max(0);
    TauPoly::from_terms((0..=hi).map(|r| (2 * r as i32, binomial(l + k - 1, 2 * m - l - r) * binomial(m + kp, r))))
}

/// T(L,p,k) as the (p+1)×(p+1) determinant with first column
/// (−1)^{ℓ−1} τ^{2(p+1−ℓ)} and remaining columns T_{ℓm}(k, k′−1).
pub fn tee_via_u(l: i64, p: i64, k: i64) -> TauPoly {
    if p < 0 {
        return TauPoly::one();
    }
    let kp = l - 2 * p - k;
    let n = p as usize + 1;
    det(Matrix::from_fn(n, n, |i, j| {
        let ell = i as i64 + 1;
        if j == 0 {
            let s = if i % 2 == 0 { 1 } else { -1 };
            TauPoly::monomial((2 * (p + 1 - ell)) as i32, BigInt::from(s))
        } else {
            tee_entry(ell, j as i64, k, kp - 1)
        }
    }))
}

/// ν_{L,p} = ½(⌊L/2⌋(⌊L/2⌋−1) − p(p+1)) as an exact rational.
pub fn nu(l: i64, p: i64) -> BigRational {
    let n = l.div_euclid(2);
    BigRational::new(BigInt::from(n * (n - 1) - p * (p + 1)), BigInt::from(2))
}

/// ν_{L,p} when it is an integer.
pub fn nu_int(l: i64, p: i64) -> Result<i32, TeeError> {
    let v = nu(l, p);
    if !v.is_integer() {
        return Err(TeeError::NonIntegralNu { l, p, nu: v.to_string() });
    }
    Ok(i32::try_from(v.to_integer()).expect("small exponent"))
}

/// The k at which τ^ν T(L,p,k) equals S_±(L,p): ⌊L/2⌋ − p for S_+ and one more for S_−.
pub fn prop1_k(l: i64, p: i64, sign: Sign) -> i64 {
    l / 2 - p + if sign == Sign::Minus { 1 } else { 0 }
}

/// Hirota lattice coordinates (n, i, j) = (L−p−k, 2p+k−L, p+k).
pub fn hirota_coords(l: i64, p: i64, k: i64) -> (i64, i64, i64) {
    (l - p - k, 2 * p + k - l, p + k)
}

/// Inverse of [`hirota_coords`]: (L, p, k) = (n+j, n+i, j−n−i).
pub fn from_hirota_coords(n: i64, i: i64, j: i64) -> (i64, i64, i64) {
    (n + j, n + i, j - n - i)
}

fn sdet_prefactor(l: usize, pt: usize) -> i32 {
    if l.is_multiple_of(2) {
        (pt * (pt + 1) / 2) as i32
    } else {
        (pt * pt.saturating_sub(1) / 2) as i32
    }
}

/// S(L,p|t) as a p×p determinant of binomial sums, for any t ∈ Q[τ, τ⁻¹].
///
/// Even L: τ^{p̃(p̃+1)/2} det[Σ_r τ^{p̃+2m+2ℓ−2r−1} C(ℓ+p̃, r−ℓ)(τ C(m+p̃, 2m−r) + t C(m+p̃, 2m−r−1))].
/// Odd L:  τ^{p̃(p̃−1)/2} det[Σ_r τ^{p̃+2m+2ℓ−2r−2} C(ℓ+p̃−1, r−ℓ)(τ C(m+p̃, 2m−r) + t C(m+p̃, 2m−r−1))].
pub fn s_det(l: usize, p: usize, t: &QTauPoly) -> Result<QTauPoly, TeeError> {
    let pt = ptilde(l, p)?;
    let odd = l % 2 == 1;
    let (top, off) = if odd { (-1, -2) } else { (0, -1) };
    let pti = pt as i64;
    let tau = QTauPoly::tau();
    let m = Matrix::from_fn(p, p, |i, j| {
        let (ell, m) = (i as i64 + 1, j as i64 + 1);
        let mut e = QTauPoly::zero();
        for r in -2..=2 * p as i64 + 2 {
            let c1 = binomial(ell + pti + top, r - ell);
            if c1.is_zero() {
                continue;
            }
            let inner = &tau.scale(&BigRational::from(binomial(m + pti, 2 * m - r)))
                + &t.scale(&BigRational::from(binomial(m + pti, 2 * m - r - 1)));
            let ex = (pti + 2 * m + 2 * ell - 2 * r + off) as i32;
            e = &e + &(&QTauPoly::monomial(ex, BigRational::from(c1)) * &inner);
        }
        e
    });
    Ok(m.det()?.shift(sdet_prefactor(l, pt)))
}

/// S_±(L,p) from the simplified determinants at t = τ^{±1}.
pub fn s_det_sign(l: usize, p: usize, sign: Sign) -> Result<TauPoly, TeeError> {
    let pt = ptilde(l, p)? as i64;
    let odd = l % 2 == 1;
    let m = Matrix::from_fn(p, p, |i, j| {
        let (ell, m) = (i as i64 + 1, j as i64 + 1);
        let terms = (-2..=2 * p as i64 + 2).map(|r| {
            let (c, off) = match (odd, sign) {
                (false, Sign::Plus) => (binomial(ell + pt, r - ell) * binomial(m + pt + 1, 2 * m - r), 0),
                (false, Sign::Minus) => (binomial(ell + pt + 1, r - ell) * binomial(m + pt, 2 * m - r), 0),
                (true, Sign::Plus) => (binomial(ell + pt - 1, r - ell) * binomial(m + pt + 1, 2 * m - r), -1),
                (true, Sign::Minus) => (binomial(ell + pt, r - ell) * binomial(m + pt, 2 * m - r), -1),
            };
            ((pt + 2 * m + 2 * ell - 2 * r + off) as i32, c)
        });
        TauPoly::from_terms(terms)
    });
    Ok(det(m).shift(sdet_prefactor(l, pt as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tp;

    #[test]
    fn small_values() {
        assert_eq!(tee(7, 0, 3), TauPoly::one());
        assert_eq!(tee(4, 1, 2), tp(&[(0, 2), (2, 1)]));
        assert_eq!(tee(6, 2, 1), tp(&[(0, 1), (2, 8), (4, 12), (6, 5)]));
        assert_eq!(tee_via_u(4, 1, 2), tee(4, 1, 2));
        assert_eq!(tee_via_u(6, 2, 2), tee(6, 2, 2));
        assert_eq!(tee_via_u(9, 0, 2), TauPoly::one());
    }

    #[test]
    fn nu_values() {
        assert_eq!(nu(4, 1), BigRational::zero());
        assert_eq!(nu_int(6, 1).unwrap(), 2);
        for n in 2..8 {
            assert_eq!(nu_int(2 * n - 1, n - 1).unwrap(), -(n as i32 - 1));
        }
    }

    #[test]
    fn coordinates() {
        assert_eq!(hirota_coords(4, 1, 2), (1, 0, 3));
        assert_eq!(hirota_coords(13, 4, 3), (6, -2, 7));
        for (l, p, k) in [(13, 4, 3), (4, 1, 2), (0, 0, 0), (-3, 5, 9)] {
            let (n, i, j) = hirota_coords(l, p, k);
            assert_eq!(from_hirota_coords(n, i, j), (l, p, k));
        }
    }

    #[test]
    fn sdet_table_values() {
        assert_eq!(s_det_sign(6, 2, Sign::Plus).unwrap(), tp(&[(0, 1), (2, 8), (4, 12), (6, 5)]));
        assert_eq!(s_det_sign(5, 2, Sign::Minus).unwrap(), tp(&[(-2, 1), (0, 5), (2, 4), (4, 1)]));
        let t = TauPoly::tau_pow(-1).to_rational_coeffs();
        assert_eq!(s_det(5, 2, &t).unwrap(), tp(&[(-2, 1), (0, 5), (2, 4), (4, 1)]).to_rational_coeffs());
        assert_eq!(s_det(8, 0, &t).unwrap(), TauPoly::tau_pow(6).to_rational_coeffs());
    }
}
