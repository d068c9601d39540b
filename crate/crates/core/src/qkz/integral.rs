//! The homogeneous-limit integral ψ̄_b as an iterated constant term.
//!
//! With n = ⌊L/2⌋ variables the integrand is
//!   Π_{ℓ≤m} (1 − u_ℓu_m) · Π_{ℓ<m} (u_m − u_ℓ)(τ + u_ℓ + u_m) · Π (1 + τu_m + u_ℓu_m),
//! the last product over ℓ < m for even L and over ℓ ≤ m for odd L, and ψ̄_b
//! is the coefficient of Π u_ℓ^{b_ℓ−1}.

use crate::ring::{MultiPoly, TauPoly};

use super::QkzError;

type Factor = Vec<(Vec<u32>, TauPoly)>;

fn unit(n: usize, vars: &[usize]) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for &v in vars {
        e[v] += 1;
    }
    e
}

/// The factors of the integrand for size L, linear ones first so that the
/// truncated product stays small for as long as possible.
fn integrand_factors(l: usize) -> Vec<Factor> {
    let n = l / 2;
    let odd = l % 2 == 1;
    let one = TauPoly::one();
    let minus_one = -&one;
    let tau = TauPoly::tau();
    let mut linear = Vec::new();
    let mut quadratic = Vec::new();
    for a in 0..n {
        for b in a..n {
            if a < b {
                linear.push(vec![(unit(n, &[b]), one.clone()), (unit(n, &[a]), minus_one.clone())]);
                linear.push(vec![(unit(n, &[]), tau.clone()), (unit(n, &[a]), one.clone()), (unit(n, &[b]), one.clone())]);
            }
            quadratic.push(vec![(unit(n, &[]), one.clone()), (unit(n, &[a, b]), minus_one.clone())]);
            if odd || a < b {
                quadratic.push(vec![
                    (unit(n, &[]), one.clone()),
                    (unit(n, &[b]), tau.clone()),
                    (unit(n, &[a, b]), one.clone()),
                ]);
            }
        }
    }
    linear.extend(quadratic);
    linear
}

/// Expand the integrand for size L truncated at the given per-variable cap.
pub fn integrand(l: usize, cap: &[u32]) -> Result<MultiPoly, QkzError> {
    let n = l / 2;
    if cap.len() != n {
        return Err(QkzError::InvalidSequence(format!("cap {cap:?} has the wrong arity for L={l}")));
    }
    let mut poly = MultiPoly::one(cap);
    for f in integrand_factors(l) {
        poly.mul_sparse(&f)?;
    }
    Ok(poly)
}

/// ψ̄_b for size L: the coefficient of Π u_ℓ^{b_ℓ−1} in the integrand.
pub fn psi_bar(b: &[u32], l: usize) -> Result<TauPoly, QkzError> {
    if b.len() != l / 2 {
        return Err(QkzError::InvalidSequence(format!("b={b:?} needs {} entries for L={l}", l / 2)));
    }
    if b.contains(&0) {
        return Err(QkzError::InvalidSequence(format!("b={b:?}: entries must be ≥ 1")));
    }
    let cap: Vec<u32> = b.iter().map(|&x| x - 1).collect();
    Ok(integrand(l, &cap)?.coeff(&cap)?)
}

/// The integrand for size L expanded once with cap L−2 in every variable,
/// which covers every admissible b. Looking up ψ̄_b is then a table read.
#[derive(Clone, Debug)]
pub struct IntegrandTable {
    l: usize,
    poly: MultiPoly,
}

impl IntegrandTable {
    pub fn new(l: usize) -> Result<Self, QkzError> {
        let cap = vec![l.saturating_sub(2) as u32; l / 2];
        Ok(IntegrandTable { l, poly: integrand(l, &cap)? })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn psi_bar(&self, b: &[u32]) -> Result<TauPoly, QkzError> {
        if b.len() != self.l / 2 || b.contains(&0) {
            return Err(QkzError::InvalidSequence(format!("b={b:?} invalid for L={}", self.l)));
        }
        let e: Vec<u32> = b.iter().map(|&x| x - 1).collect();
        Ok(self.poly.coeff(&e)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tp;

    #[test]
    fn omega_normalisation() {
        for l in 2usize..=9 {
            let n = l / 2;
            let b: Vec<u32> = (1..=n as u32).collect();
            let want = TauPoly::tau_pow((n * n.saturating_sub(1) / 2) as i32);
            assert_eq!(psi_bar(&b, l).unwrap(), want, "L={l}");
        }
    }

    #[test]
    fn table_matches_direct() {
        let t = IntegrandTable::new(6).unwrap();
        for b in [[1, 2, 4], [1, 2, 3], [2, 3, 5], [1, 1, 1]] {
            assert_eq!(t.psi_bar(&b).unwrap(), psi_bar(&b, 6).unwrap());
        }
        assert_eq!(t.psi_bar(&[1, 2, 4]).unwrap(), tp(&[(2, 2), (4, 2)]));
        assert_eq!(psi_bar(&[1, 2, 4, 6], 8).unwrap(), tp(&[(3, 6), (5, 21), (7, 18), (9, 5)]));
    }

    #[test]
    fn arity_checked() {
        assert!(psi_bar(&[1, 2], 6).is_err());
        assert!(psi_bar(&[0, 1, 2], 6).is_err());
    }
}
