//! Sparse multivariate Laurent polynomials over τ-Laurent coefficients.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so the number of
//! variables is implicit and `zero`/`one` need no arity.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::laurent::TauPoly;
use super::scalar::Ring;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Vec<i32>, TauPoly>,
}

fn trim(mut e: Vec<i32>) -> Vec<i32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn constant(c: TauPoly) -> Self {
        Self::monomial(vec![], c)
    }

    pub fn monomial(e: Vec<i32>, c: TauPoly) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(trim(e), c);
        }
        p
    }

    /// The variable u_i (0-based) raised to `pow`.
    pub fn var_pow(i: usize, pow: i32) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = pow;
        Self::monomial(e, TauPoly::one())
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn tau() -> Self {
        Self::constant(TauPoly::tau())
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(TauPoly::constant(BigInt::from(v)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &TauPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, e: Vec<i32>, c: &TauPoly) {
        let e = trim(e);
        let sum = match self.terms.get(&e) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert_add(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<Vec<i32>, TauPoly> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let n = e1.len().max(e2.len());
                let e: Vec<i32> =
                    (0..n).map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0)).collect();
                let slot = acc.entry(trim(e)).or_insert_with(TauPoly::zero);
                *slot = &*slot + &(c1 * c2);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SparsePoly { terms: acc }
    }

    pub fn scale(&self, c: &TauPoly) -> Self {
        self.mul(&Self::constant(c.clone()))
    }

    /// Substitute u_i ↦ u_{perm[i]} for i < perm.len().
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = vec![0; e.len().max(perm.iter().max().map_or(0, |m| m + 1))];
            for (i, &x) in e.iter().enumerate() {
                let target = if i < perm.len() { perm[i] } else { i };
                if target >= ne.len() {
                    ne.resize(target + 1, 0);
                }
                ne[target] += x;
            }
            out.insert_add(ne, c);
        }
        out
    }

    /// Keep only monomials whose exponents are all ≤ 0.
    pub fn nonpositive_part(&self) -> Self {
        SparsePoly { terms: self.terms.iter().filter(|(e, _)| e.iter().all(|&x| x <= 0)).map(|(e, c)| (e.clone(), c.clone())).collect() }
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    // Graded lexicographic order: total degree first, then lexicographic.
    fn lead(&self) -> Option<(&Vec<i32>, &TauPoly)> {
        self.terms.iter().max_by(|a, b| {
            let da: i32 = a.0.iter().sum();
            let db: i32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| pad_cmp(a.0, b.0))
        })
    }

    /// Exact division of Laurent polynomials, or `None` if the quotient is
    /// not a Laurent polynomial.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.terms.len() == 1 {
            let (de, dc) = d.terms.iter().next().unwrap();
            let mut out = Self::zero();
            for (e, c) in &self.terms {
                let n = e.len().max(de.len());
                let q: Vec<i32> = (0..n).map(|i| e.get(i).copied().unwrap_or(0) - de.get(i).copied().unwrap_or(0)).collect();
                out.insert_add(q, &c.div_exact(dc)?);
            }
            return Some(out);
        }
        if d.is_zero() {
            return None;
        }
        // Clear monomial content on both sides. The normalized divisor is
        // divisible by no variable, so the quotient of the normalized
        // operands is a polynomial whenever the division is exact at all.
        let (ms, md) = (self.min_exponents(), d.min_exponents());
        let neg = |m: &[i32]| m.iter().map(|x| -x).collect::<Vec<_>>();
        let num = self.times_monomial(&neg(&ms));
        let den = d.times_monomial(&neg(&md));
        let n = ms.len().max(md.len());
        let shift: Vec<i32> = (0..n).map(|i| ms.get(i).copied().unwrap_or(0) - md.get(i).copied().unwrap_or(0)).collect();
        Some(num.poly_div(&den)?.times_monomial(&shift))
    }

    fn poly_div(&self, d: &Self) -> Option<Self> {
        let (de, dc) = d.lead().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((re, rc)) = rem.lead().map(|(e, c)| (e.clone(), c.clone())) {
            let n = re.len().max(de.len());
            let e: Vec<i32> = (0..n).map(|i| re.get(i).copied().unwrap_or(0) - de.get(i).copied().unwrap_or(0)).collect();
            if e.iter().any(|&x| x < 0) {
                return None;
            }
            let c = rc.div_exact(&dc)?;
            let t = Self::monomial(e, c);
            rem = rem.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Componentwise minimum exponent over all terms.
    fn min_exponents(&self) -> Vec<i32> {
        let n = self.terms.keys().map(Vec::len).max().unwrap_or(0);
        (0..n).map(|i| self.terms.keys().map(|e| e.get(i).copied().unwrap_or(0)).min().unwrap_or(0)).collect()
    }

    fn times_monomial(&self, m: &[i32]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let n = e.len().max(m.len());
            out.insert_add((0..n).map(|i| e.get(i).copied().unwrap_or(0) + m.get(i).copied().unwrap_or(0)).collect(), c);
        }
        out
    }
}

fn pad_cmp(a: &[i32], b: &[i32]) -> std::cmp::Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let (x, y) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
        if x != y {
            return x.cmp(&y);
        }
    }
    std::cmp::Ordering::Equal
}

impl Ring for SparsePoly {
    fn zero() -> Self {
        SparsePoly::zero()
    }
    fn one() -> Self {
        SparsePoly::constant(TauPoly::one())
    }
    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        SparsePoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        SparsePoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        SparsePoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        SparsePoly::neg(self)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        SparsePoly::div_exact(self, d)
    }
    fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(|c| c.is_unit())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("({c})·u^{e:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_division() {
        let x = SparsePoly::var(0);
        let y = SparsePoly::var(1);
        let q = x.add(&SparsePoly::var_pow(1, -2)).mul(&SparsePoly::tau());
        let d = x.mul(&y).add(&SparsePoly::from_int(1)).mul(&SparsePoly::var_pow(0, -1));
        assert_eq!(q.mul(&d).div_exact(&d), Some(q.clone()));
        assert_eq!(x.div_exact(&x.add(&y)), None);
    }

    #[test]
    fn exact_division_of_products() {
        let x = SparsePoly::var(0);
        let y = SparsePoly::var(1);
        let a = x.add(&y.mul(&SparsePoly::tau()));
        let b = x.mul(&y).add(&SparsePoly::from_int(3));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(a.add(&SparsePoly::from_int(1)).div_exact(&b), None);
        let m = SparsePoly::var_pow(1, 2);
        assert_eq!(a.div_exact(&m), Some(a.mul(&SparsePoly::var_pow(1, -2))));
    }

    #[test]
    fn permutation_and_truncation() {
        let p = SparsePoly::var_pow(0, -1).mul(&SparsePoly::var_pow(1, 2));
        assert_eq!(p.permute(&[1, 0]), SparsePoly::var_pow(1, -1).mul(&SparsePoly::var_pow(0, 2)));
        assert!(p.nonpositive_part().is_zero());
        assert_eq!(SparsePoly::var_pow(0, -2).nonpositive_part(), SparsePoly::var_pow(0, -2));
    }

    #[test]
    fn cancellation_leaves_canonical_zero() {
        let x = SparsePoly::var(2);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.sub(&x), SparsePoly::zero());
    }
}
