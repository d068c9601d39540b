//! Seeded randomized checks of the arithmetic layer: ring axioms for Laurent
//! polynomials, the Plücker relation, the q-number limit and the JSON round trip.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::Report;

use super::{pluecker_check, rat, tau_qnumber, Matrix, TauPoly};

pub fn random_tau_poly(rng: &mut ChaCha8Rng) -> TauPoly {
    let n = rng.gen_range(0..6);
    TauPoly::from_terms((0..n).map(|_| (rng.gen_range(-6..=6), BigInt::from(rng.gen_range(-20..=20)))))
}

pub fn verify_ring_properties(trials: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("ring");
    for trial in 0..trials {
        let (a, b, c) = (random_tau_poly(&mut rng), random_tau_poly(&mut rng), random_tau_poly(&mut rng));
        let p = json!({"trial": trial, "a": a.to_string(), "b": b.to_string(), "c": c.to_string()});
        let assoc = &(&a * &b) * &c == &a * &(&b * &c);
        let distrib = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        let commut = &a * &b == &b * &a && &a + &b == &b + &a;
        let inverse = (&a + &(-&a)).is_zero() && &a * &TauPoly::one() == a;
        let quotient = b.is_zero() || (&a * &b).div_exact(&b).as_ref() == Some(&a);
        let json_ok = TauPoly::from_json(&a.to_json()).as_ref() == Some(&a);
        for (name, ok) in
            [("assoc", assoc), ("distrib", distrib), ("commut", commut), ("inverse", inverse), ("quotient", quotient), ("json", json_ok)]
        {
            rep.check(json!({"law": name, "at": p}), ok, || ("holds".into(), "violated".into()));
        }

        let n = rng.gen_range(1..=4);
        let ma = Matrix::from_fn(n, n, |_, _| random_tau_poly(&mut rng));
        let mb = Matrix::from_fn(n, n, |_, _| random_tau_poly(&mut rng));
        let ok = pluecker_check(&ma, &mb).unwrap_or(false);
        rep.check(json!({"law": "pluecker", "trial": trial, "n": n}), ok, || ("holds".into(), "violated".into()));
    }
    // [k] at q = 1, i.e. τ = −2, is k.
    for k in 0..=40u32 {
        let v = tau_qnumber(k).eval(&rat(-2, 1));
        rep.compare(json!({"law": "qnumber_limit", "k": k}), &rat(k as i64, 1), &v);
    }
    rep.with_ranges(json!({"trials": trials, "seed": seed}))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn green() {
        let r = verify_ring_properties(30, 5);
        assert!(r.passed(), "{:?}", r.failed);
    }
}
