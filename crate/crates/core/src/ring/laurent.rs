//! Laurent polynomials in a single variable τ.
//!
//! Storage is dense between the lowest and highest nonzero exponent, which is
//! compact for everything this crate produces (short τ-ranges, big
//! coefficients). The zero polynomial has an empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::scalar::{format_rational, parse_rational, Ring, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    lo: i32,
    coeffs: Vec<C>,
}

/// Laurent polynomial in τ with integer coefficients.
pub type TauPoly = Laurent<BigInt>;
/// Laurent polynomial in τ with rational coefficients.
pub type QTauPoly = Laurent<BigRational>;

impl<C: Scalar> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// `c·τ^e`.
    pub fn monomial(e: i32, c: C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { lo: e, coeffs: vec![c] }
    }

    /// `τ^e`.
    pub fn tau_pow(e: i32) -> Self {
        Self::monomial(e, C::one())
    }

    pub fn tau() -> Self {
        Self::tau_pow(1)
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(terms: I) -> Self {
        let terms: Vec<(i32, C)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.add(&c);
        }
        Self::normalized(lo, coeffs)
    }

    fn normalized(mut lo: i32, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        lo += lead as i32;
        Laurent { lo, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i32 - 1)
    }

    /// Coefficient of τ^e (zero if absent).
    pub fn coeff(&self, e: i32) -> C {
        let idx = e - self.lo;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiply by τ^e.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { lo: self.lo + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::normalized(self.lo, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute τ ↦ τ^{-1}.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Evaluate at a rational point. Panics only if `t` is zero and negative
    /// exponents are present.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = <BigRational as Zero>::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 { num_traits::pow(t.clone(), e as usize) } else { num_traits::pow(t.recip(), (-e) as usize) };
            acc += c.to_rational() * p;
        }
        acc
    }

    /// Substitute τ ↦ τ^e.
    pub fn compose_monomial(&self, e: i32) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k * e, c.clone())))
    }

    pub fn to_rational_coeffs(&self) -> QTauPoly {
        Laurent::from_terms(self.terms().map(|(e, c)| (e, c.to_rational())))
    }

    /// Exact long division; `None` when `d` is zero or does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlo = d.lo;
        let dhi = d.max_exp().unwrap();
        let dlead = d.coeffs.last().unwrap();
        let mut rem = self.clone();
        let mut q: Vec<(i32, C)> = Vec::new();
        while !rem.is_zero() {
            let rhi = rem.max_exp().unwrap();
            // An exact quotient spans exactly span(self) - span(d); a shorter
            // remainder means a nonzero remainder.
            if rhi - dhi < rem.lo - dlo {
                return None;
            }
            let c = rem.coeffs.last().unwrap().div_exact(dlead)?;
            let e = rhi - dhi;
            rem = &rem - &d.shift(e).scale(&c);
            q.push((e, c));
        }
        Some(Self::from_terms(q))
    }

    /// True when every exponent has the same parity as the lowest one, i.e.
    /// the value is τ^m times a polynomial in τ².
    pub fn is_single_parity(&self) -> bool {
        self.terms().all(|(e, _)| (e - self.lo).rem_euclid(2) == 0)
    }
}

impl TauPoly {
    /// Sum of coefficients (the value at τ = 1).
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().fold(<BigInt as Zero>::zero(), |a, c| a + c)
    }

    /// Shared JSON form `{"ring":"Z[tau,tau^-1]","terms":[[e,"c"],...]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms().map(|(e, c)| json!([e, c.to_string()])).collect();
        json!({"ring": "Z[tau,tau^-1]", "terms": terms})
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        if v.get("ring")?.as_str()? != "Z[tau,tau^-1]" {
            return None;
        }
        let mut out = Vec::new();
        for t in v.get("terms")?.as_array()? {
            let pair = t.as_array()?;
            if pair.len() != 2 {
                return None;
            }
            let e = i32::try_from(pair[0].as_i64()?).ok()?;
            let c: BigInt = pair[1].as_str()?.parse().ok()?;
            out.push((e, c));
        }
        Some(Self::from_terms(out))
    }

    /// Parse a compact human form such as `"1 + 5t^2 - t^-1"` (variable `t` or `tau`).
    pub fn parse(s: &str) -> Option<Self> {
        let cleaned: String = s.replace("tau", "t").replace('τ', "t").split_whitespace().collect();
        if cleaned.is_empty() || cleaned == "0" {
            return Some(Self::zero());
        }
        let mut terms = Vec::new();
        let mut chunk = String::new();
        let mut pieces = Vec::new();
        let mut prev = None;
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                pieces.push(std::mem::take(&mut chunk));
            }
            chunk.push(ch);
            prev = Some(ch);
        }
        pieces.push(chunk);
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let (coef, exp) = match body.split_once('t') {
                None => (body.parse::<BigInt>().ok()?, 0),
                Some((c, e)) => {
                    let c = c.trim_end_matches('*');
                    let coef = if c.is_empty() { <BigInt as One>::one() } else { c.parse().ok()? };
                    let exp = match e.strip_prefix('^') {
                        Some(x) => x.trim_matches(|c| c == '(' || c == ')').parse::<i32>().ok()?,
                        None if e.is_empty() => 1,
                        None => return None,
                    };
                    (coef, exp)
                }
            };
            terms.push((exp, coef * sign));
        }
        Some(Self::from_terms(terms))
    }
}

impl QTauPoly {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms().map(|(e, c)| json!([e, format_rational(c)])).collect();
        json!({"ring": "Q[tau,tau^-1]", "terms": terms})
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        if v.get("ring")?.as_str()? != "Q[tau,tau^-1]" {
            return None;
        }
        let mut out = Vec::new();
        for t in v.get("terms")?.as_array()? {
            let pair = t.as_array()?;
            let e = i32::try_from(pair.first()?.as_i64()?).ok()?;
            out.push((e, parse_rational(pair.get(1)?.as_str()?)?));
        }
        Some(Self::from_terms(out))
    }

    /// The integer-coefficient polynomial, if every coefficient is integral.
    pub fn to_integer_coeffs(&self) -> Option<TauPoly> {
        let mut out = Vec::new();
        for (e, c) in self.terms() {
            if !c.is_integer() {
                return None;
            }
            out.push((e, c.to_integer()));
        }
        Some(TauPoly::from_terms(out))
    }
}

impl<C: Scalar> Ring for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        Laurent::div_exact(self, d)
    }
    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_unit()
    }
}

fn combine<C: Scalar>(a: &Laurent<C>, b: &Laurent<C>, negate_b: bool) -> Laurent<C> {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.lo.min(b.lo);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.lo - lo) as usize + i] = c.clone();
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.lo - lo) as usize + i];
        *slot = if negate_b { slot.sub(c) } else { slot.add(c) };
    }
    Laurent::normalized(lo, coeffs)
}

impl<C: Scalar> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, o: Self) -> Laurent<C> {
        combine(self, o, false)
    }
}

impl<C: Scalar> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, o: Self) -> Laurent<C> {
        combine(self, o, true)
    }
}

impl<C: Scalar> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, o: Self) -> Laurent<C> {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Laurent::normalized(self.lo + o.lo, coeffs)
    }
}

impl<C: Scalar> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { lo: self.lo, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: Scalar> $tr for Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, o: Self) -> Laurent<C> { $tr::$m(&self, &o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<C: Scalar> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Scalar> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "τ")?,
                1 => write!(f, "{mag}τ")?,
                _ if unit => write!(f, "τ^{e}")?,
                _ => write!(f, "{mag}τ^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

/// The q-number [k] as a polynomial in τ = -(q + q⁻¹):
/// [0] = 0, [1] = 1, [k+1] = -τ[k] - [k-1].
pub fn tau_qnumber(k: u32) -> TauPoly {
    let mut prev = TauPoly::zero();
    let mut cur = TauPoly::one();
    if k == 0 {
        return prev;
    }
    let minus_tau = TauPoly::monomial(1, BigInt::from(-1));
    for _ in 1..k {
        let next = &(&minus_tau * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Shorthand used throughout tests and examples: `tp(&[(e, c), ...])`.
pub fn tp(terms: &[(i32, i64)]) -> TauPoly {
    TauPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::rat;

    #[test]
    fn canonical_form() {
        let a = tp(&[(3, 1), (3, -1), (1, 2)]);
        assert_eq!(a, tp(&[(1, 2)]));
        assert_eq!(tp(&[(2, 0)]), TauPoly::zero());
        assert_eq!(a.min_exp(), Some(1));
    }

    #[test]
    fn qnumbers() {
        assert_eq!(tau_qnumber(0), TauPoly::zero());
        assert_eq!(tau_qnumber(1), TauPoly::one());
        assert_eq!(tau_qnumber(2), tp(&[(1, -1)]));
        assert_eq!(tau_qnumber(3), tp(&[(2, 1), (0, -1)]));
        for k in 0..=20u32 {
            assert_eq!(tau_qnumber(k).eval(&rat(-2, 1)), rat(k as i64, 1));
        }
    }

    #[test]
    fn exact_division() {
        let a = tp(&[(0, 1), (2, 1)]);
        let b = tp(&[(-1, 2), (3, -5)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(tp(&[(0, 1), (1, 1)]).div_exact(&a), None);
        assert_eq!(a.div_exact(&TauPoly::zero()), None);
        assert_eq!(tp(&[(0, 3)]).div_exact(&tp(&[(0, 2)])), None);
    }

    #[test]
    fn json_round_trip() {
        let a = tp(&[(-2, 1), (0, 5), (2, 4), (4, 1)]);
        let v = a.to_json();
        assert_eq!(v.to_string(), r#"{"ring":"Z[tau,tau^-1]","terms":[[-2,"1"],[0,"5"],[2,"4"],[4,"1"]]}"#);
        assert_eq!(TauPoly::from_json(&v), Some(a));
        assert_eq!(TauPoly::from_json(&TauPoly::zero().to_json()), Some(TauPoly::zero()));
    }

    #[test]
    fn parse_and_display() {
        let a = TauPoly::parse("1 + 5t^2 + 4t^4 + t^6").unwrap();
        assert_eq!(a, tp(&[(0, 1), (2, 5), (4, 4), (6, 1)]));
        assert_eq!(a.to_string(), "1 + 5τ^2 + 4τ^4 + τ^6");
        let b = TauPoly::parse("-t^-2 - 3tau").unwrap();
        assert_eq!(b, tp(&[(-2, -1), (1, -3)]));
        assert_eq!(TauPoly::parse(&b.to_string()), Some(b));
        assert_eq!(TauPoly::parse("2τ^2 − 1"), None);
        assert_eq!(TauPoly::parse("ττ"), None);
    }

    #[test]
    fn invert_variable_and_parity() {
        let a = tp(&[(1, 2), (3, 1)]);
        assert_eq!(a.invert_variable(), tp(&[(-1, 2), (-3, 1)]));
        assert!(a.is_single_parity());
        assert!(!tp(&[(0, 1), (1, 1)]).is_single_parity());
    }
}
