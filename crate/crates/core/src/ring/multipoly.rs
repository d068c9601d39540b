//! Truncated polynomials in u₁..u_n over τ-Laurent coefficients.
//!
//! Monomials whose exponent exceeds the per-variable cap in any variable are
//! dropped on construction and after every product. Coefficients inside the
//! cap are exact as long as every factor is a genuine polynomial, which is the
//! only way this type is used.

use rayon::prelude::*;

use super::laurent::TauPoly;
use super::RingError;

#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly {
    cap: Vec<u32>,
    strides: Vec<usize>,
    // Dense over the box 0..=cap, row-major with the last variable fastest.
    coeffs: Vec<TauPoly>,
}

impl MultiPoly {
    pub fn zero(cap: &[u32]) -> Self {
        let mut strides = vec![0usize; cap.len()];
        let mut size = 1usize;
        for v in (0..cap.len()).rev() {
            strides[v] = size;
            size *= cap[v] as usize + 1;
        }
        MultiPoly { cap: cap.to_vec(), strides, coeffs: vec![TauPoly::zero(); size] }
    }

    pub fn one(cap: &[u32]) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[0] = TauPoly::one();
        p
    }

    /// Build from `(exponent vector, coefficient)` terms; terms beyond the cap
    /// are discarded.
    pub fn from_terms(cap: &[u32], terms: &[(Vec<u32>, TauPoly)]) -> Result<Self, RingError> {
        let mut p = Self::zero(cap);
        for (e, c) in terms {
            if e.len() != cap.len() {
                return Err(RingError::Arity { expected: cap.len(), found: e.len() });
            }
            if let Some(idx) = p.index(e) {
                p.coeffs[idx] = &p.coeffs[idx] + c;
            }
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.cap.len()
    }

    pub fn cap(&self) -> &[u32] {
        &self.cap
    }

    fn index(&self, e: &[u32]) -> Option<usize> {
        let mut idx = 0;
        for (v, &x) in e.iter().enumerate() {
            if x > self.cap[v] {
                return None;
            }
            idx += x as usize * self.strides[v];
        }
        Some(idx)
    }

    fn exponent(&self, mut idx: usize) -> Vec<u32> {
        self.strides
            .iter()
            .map(|&s| {
                let x = idx / s;
                idx %= s;
                x as u32
            })
            .collect()
    }

    /// Coefficient of u^e. Asking for a monomial outside the cap is an error:
    /// its value would have been silently truncated away.
    pub fn coeff(&self, e: &[u32]) -> Result<TauPoly, RingError> {
        if e.len() != self.nvars() {
            return Err(RingError::Arity { expected: self.nvars(), found: e.len() });
        }
        self.index(e).map(|i| self.coeffs[i].clone()).ok_or(RingError::OutsideCap)
    }

    /// Nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &TauPoly)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.exponent(i), c))
    }

    /// Multiply in place by a sparse factor given as `(exponent, coefficient)` terms.
    pub fn mul_sparse(&mut self, factor: &[(Vec<u32>, TauPoly)]) -> Result<(), RingError> {
        for (fe, _) in factor {
            if fe.len() != self.nvars() {
                return Err(RingError::Arity { expected: self.nvars(), found: fe.len() });
            }
        }
        let terms: Vec<(&[u32], usize, &TauPoly)> = factor
            .iter()
            .filter(|(fe, _)| fe.iter().zip(&self.cap).all(|(x, c)| x <= c))
            .map(|(fe, fc)| {
                let off = fe.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum();
                (fe.as_slice(), off, fc)
            })
            .collect();
        // Gather: each output cell sums the shifted sources that land on it.
        let src = &self.coeffs;
        let strides = &self.strides;
        let out: Vec<TauPoly> = (0..src.len())
            .into_par_iter()
            .map(|t| {
                let mut acc = TauPoly::zero();
                for (fe, off, fc) in &terms {
                    let mut rem = t;
                    let fits = strides.iter().zip(fe.iter()).all(|(&s, &x)| {
                        let v = rem / s;
                        rem %= s;
                        v as u32 >= x
                    });
                    if fits {
                        let c = &src[t - off];
                        if !c.is_zero() {
                            acc = &acc + &(c * *fc);
                        }
                    }
                }
                acc
            })
            .collect();
        self.coeffs = out;
        Ok(())
    }

    /// Truncated product. Both operands must share the cap.
    pub fn mul(&self, o: &Self) -> Result<Self, RingError> {
        if o.cap != self.cap {
            return Err(RingError::Arity { expected: self.nvars(), found: o.nvars() });
        }
        let factor: Vec<(Vec<u32>, TauPoly)> = o.terms().map(|(e, c)| (e, c.clone())).collect();
        let mut out = self.clone();
        out.mul_sparse(&factor)?;
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Result<Self, RingError> {
        if o.cap != self.cap {
            return Err(RingError::Arity { expected: self.nvars(), found: o.nvars() });
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&o.coeffs) {
            *a = &*a + b;
        }
        Ok(out)
    }

    /// Re-truncate (or zero-extend) to a different cap.
    pub fn with_cap(&self, cap: &[u32]) -> Result<Self, RingError> {
        let terms: Vec<(Vec<u32>, TauPoly)> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        Self::from_terms(cap, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::laurent::tp;

    #[test]
    fn coefficient_extraction() {
        let p = MultiPoly::from_terms(&[1, 1], &[(vec![0, 0], tp(&[(0, 1)])), (vec![1, 1], tp(&[(0, 1)]))]).unwrap();
        assert_eq!(p.coeff(&[1, 1]).unwrap(), tp(&[(0, 1)]));
        assert_eq!(p.coeff(&[1, 0]).unwrap(), TauPoly::zero());
        assert!(matches!(p.coeff(&[0]), Err(RingError::Arity { .. })));
        assert!(matches!(p.coeff(&[2, 0]), Err(RingError::OutsideCap)));
    }

    #[test]
    fn binomial_square() {
        // (τ + u)² has u¹-coefficient 2τ.
        let f = MultiPoly::from_terms(&[2], &[(vec![0], tp(&[(1, 1)])), (vec![1], tp(&[(0, 1)]))]).unwrap();
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.coeff(&[1]).unwrap(), tp(&[(1, 2)]));
        assert_eq!(sq.coeff(&[2]).unwrap(), tp(&[(0, 1)]));
    }

    #[test]
    fn truncation_drops_high_terms() {
        let f = MultiPoly::from_terms(&[1], &[(vec![0], tp(&[(0, 1)])), (vec![1], tp(&[(0, 1)]))]).unwrap();
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.terms().count(), 2);
        assert_eq!(sq.coeff(&[1]).unwrap(), tp(&[(0, 2)]));
    }
}
