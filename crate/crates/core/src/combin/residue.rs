//! Three rational identities in (x, y, a), each written as a sum of residues
//! of a rational function of u at the two poles that depend on x.
//!
//! With μ(u, X) = a(a+u) − (1+au)X² and
//! D = (a²x²−y²)(a²y²−x²)(a²−x²y²)(1−a²x²y²), let
//! R[f] = Σ_{u₀ : μ(u₀,x)μ(u₀,1/x) = 0} Res_{u=u₀} f(u) / (μ(u,x)μ(u,1/x)μ(u,a/y)μ(u,ay)).
//! The identities are
//!
//!   U:   1/D = −a³(a²−1)² / ((a²+1)x²y⁴(x²−a²)(a²x²−1)) · R[u(u + a + 1/a)]
//!   VHP: a²x²y²/a⁴ · P_V/D = (1−a²)² R[u(1 + u(a + 1/a))],
//!        P_V = −a²y²(1+x⁴) + ((a⁴+a²+1)(1+y⁴) − (a²+1)²y²)x²
//!   HT:  a²x²y²/a⁴ · P_H/D = (1−a²)² R[u],
//!        P_H = (a²+1)²x²y² − a²(x²+y²)(1+x²y²)

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::Report;
use crate::ring::{format_rational, rat, BigRational};

use super::CombinError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueIdentity {
    U,
    Vhp,
    Ht,
}

impl ResidueIdentity {
    pub const ALL: [ResidueIdentity; 3] = [ResidueIdentity::U, ResidueIdentity::Vhp, ResidueIdentity::Ht];
}

impl FromStr for ResidueIdentity {
    type Err = CombinError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "u" => Ok(ResidueIdentity::U),
            "vhp" => Ok(ResidueIdentity::Vhp),
            "ht" => Ok(ResidueIdentity::Ht),
            _ => Err(CombinError::Parse(format!("unknown identity {s:?} (expected U, VHP or HT)"))),
        }
    }
}

impl fmt::Display for ResidueIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResidueIdentity::U => "U",
            ResidueIdentity::Vhp => "VHP",
            ResidueIdentity::Ht => "HT",
        })
    }
}

/// Both sides of one identity at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueCheck {
    pub which: ResidueIdentity,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl ResidueCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// μ(u, X) = αu + β.
fn mu_coeffs(a: &BigRational, big_x: &BigRational) -> (BigRational, BigRational) {
    let x2 = big_x * big_x;
    (a * (BigRational::one() - &x2), a * a - x2)
}

fn numerator(which: ResidueIdentity, u: &BigRational, a: &BigRational) -> BigRational {
    let s = a + a.recip();
    match which {
        ResidueIdentity::U => u * (u + s),
        ResidueIdentity::Vhp => u * (BigRational::one() + u * s),
        ResidueIdentity::Ht => u.clone(),
    }
}

/// R[f] for the identity's numerator. Fails when a pole is not simple or a
/// factor degenerates.
pub fn residue_sum(which: ResidueIdentity, x: &BigRational, y: &BigRational, a: &BigRational) -> Result<BigRational, CombinError> {
    let pole = || CombinError::Pole(format!("x={}, y={}, a={}", format_rational(x), format_rational(y), format_rational(a)));
    if x.is_zero() || y.is_zero() || a.is_zero() {
        return Err(pole());
    }
    let factors: Vec<(BigRational, BigRational)> =
        [x.clone(), x.recip(), a / y, a * y].iter().map(|big_x| mu_coeffs(a, big_x)).collect();
    let mut sum = BigRational::zero();
    for j in 0..2 {
        let (alpha, beta) = &factors[j];
        if alpha.is_zero() {
            return Err(pole());
        }
        let u0 = -(beta / alpha);
        let mut den = alpha.clone();
        for (i, (al, be)) in factors.iter().enumerate() {
            if i != j {
                let v = al * &u0 + be;
                if v.is_zero() {
                    return Err(pole());
                }
                den *= v;
            }
        }
        sum += numerator(which, &u0, a) / den;
    }
    Ok(sum)
}

/// Evaluate both sides of an identity at (x, y, a).
pub fn residue_identity_check(
    which: ResidueIdentity,
    x: &BigRational,
    y: &BigRational,
    a: &BigRational,
) -> Result<ResidueCheck, CombinError> {
    let one = BigRational::one();
    let (x2, y2, a2) = (x * x, y * y, a * a);
    let d = (&a2 * &x2 - &y2) * (&a2 * &y2 - &x2) * (&a2 - &x2 * &y2) * (&one - &a2 * &x2 * &y2);
    let pole = || CombinError::Pole(format!("x={}, y={}, a={}", format_rational(x), format_rational(y), format_rational(a)));
    if d.is_zero() {
        return Err(pole());
    }
    let r = residue_sum(which, x, y, a)?;
    let (lhs, rhs) = match which {
        ResidueIdentity::U => {
            let den = (&a2 + &one) * &x2 * &y2 * &y2 * (&x2 - &a2) * (&a2 * &x2 - &one);
            if den.is_zero() {
                return Err(pole());
            }
            let pre = a * &a2 * (&a2 - &one) * (&a2 - &one) / den;
            (d.recip(), -(pre * r))
        }
        ResidueIdentity::Vhp | ResidueIdentity::Ht => {
            let poly = if which == ResidueIdentity::Vhp {
                -(&a2 * &y2 * (&one + &x2 * &x2))
                    + ((&a2 * &a2 + &a2 + &one) * (&one + &y2 * &y2) - (&a2 + &one) * (&a2 + &one) * &y2) * &x2
            } else {
                (&a2 + &one) * (&a2 + &one) * &x2 * &y2 - &a2 * (&x2 + &y2) * (&one + &x2 * &y2)
            };
            let lhs = &poly * &a2 * &x2 * &y2 / (&a2 * &a2 * &d);
            (lhs, (&one - &a2) * (&one - &a2) * r)
        }
    };
    Ok(ResidueCheck { which, lhs, rhs })
}

/// Check each identity at `trials` random rational points, redrawing points
/// that hit a pole or the excluded values 0, ±1.
pub fn verify_residues(trials: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("residues");
    let draw = |rng: &mut ChaCha8Rng| loop {
        let v = rat(rng.gen_range(-19..=19), rng.gen_range(1..=19));
        if !v.is_zero() && v != rat(1, 1) && v != rat(-1, 1) {
            return v;
        }
    };
    for which in ResidueIdentity::ALL {
        let mut done = 0;
        while done < trials {
            let (x, y, a) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
            let Ok(c) = residue_identity_check(which, &x, &y, &a) else { continue };
            done += 1;
            let params = json!({"identity": which.to_string(), "x": format_rational(&x), "y": format_rational(&y), "a": format_rational(&a)});
            rep.check(params, c.holds(), || (format_rational(&c.lhs), format_rational(&c.rhs)));
        }
    }
    rep.with_ranges(json!({"trials": trials, "seed": seed}))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point() {
        let (x, y, a) = (rat(2, 3), rat(5, 7), rat(3, 11));
        for w in ResidueIdentity::ALL {
            let c = residue_identity_check(w, &x, &y, &a).unwrap();
            assert!(c.holds(), "{w}: {} vs {}", c.lhs, c.rhs);
        }
    }

    #[test]
    fn pole_is_reported() {
        let e = residue_identity_check(ResidueIdentity::Ht, &rat(2, 1), &rat(2, 1), &rat(1, 1));
        assert!(matches!(e, Err(CombinError::Pole(_))));
    }

    #[test]
    fn random_points() {
        let r = verify_residues(20, 3);
        assert!(r.passed() && r.checked == 60, "{:?}", r.failed);
    }
}
