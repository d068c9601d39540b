//! The closed product
//!
//!   2^{2p(L−p−1)/3} Π_{j=1}^p Γ(L−j+1) Γ((2L+2j+3)/6) Γ((L−2j+3)/3)
//!                             / (Γ(L−2j+1) Γ(j+½) Γ((2L−j+3)/3)),
//!
//! which equals S_±(L,p) at τ = 1, evaluated in binary fixed point.
//!
//! Γ(x) = N^x e^{−N} Σ_{k≥0} N^k / (x)_{k+1} + Γ(x, N), where the upper
//! incomplete Γ(x, N) is negligible for large N. For each j the three
//! arguments upstairs and downstairs have the same sum, so the prefactors
//! N^x e^{−N} cancel and only the series are needed. Every rounding and
//! truncation is bounded, giving a rigorous relative error bound.

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CombinError;

/// Smallest and largest accepted working precision, in bits.
pub const MIN_BITS: u32 = 64;
pub const MAX_BITS: u32 = 512;

/// A fixed-point result: value ≈ mantissa · 2^{−scale_bits}, with
/// |value − exact| ≤ 2^{rel_error_log2} · exact.
#[derive(Clone, Debug, PartialEq)]
pub struct SFactor {
    pub l: u32,
    pub p: u32,
    pub mantissa: BigInt,
    pub scale_bits: u32,
    pub rel_error_log2: f64,
}

/// log₂ of a positive big integer, to double precision.
pub fn log2_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).log2();
    }
    let shift = bits - 60;
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

/// log₂(2^a + 2^b).
fn log2_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    hi + (1.0 + (lo - hi).exp2()).log2()
}

/// Σ_k N^k/(x)_{k+1} for x = a/d, scaled by 2^w and rounded down term by
/// term. Returns the sum and log₂ of a bound on its relative error, counting
/// both the rounding and the omitted incomplete-Γ tail.
fn series(a: u64, d: u64, n: u64, w: u32) -> (BigInt, f64) {
    let x = a as f64 / d as f64;
    let nd = BigInt::from(n * d);
    let mut t = (BigInt::one() << w) * d / a;
    let mut sum = t.clone();
    // Accumulated absolute error of t_k in units of 2^{−w}, kept as log₂;
    // δ_k ≤ r_k δ_{k−1} + 1 with r_k = N d/(a + k d).
    let mut delta = 0.0f64;
    let mut total = delta;
    let mut k = 0u64;
    loop {
        k += 1;
        let den = a + k * d;
        t = t * &nd / den;
        let r = (n * d) as f64 / den as f64;
        delta = log2_add(delta + r.log2(), 0.0);
        total = log2_add(total, delta);
        if t.is_zero() && k >= 2 * n {
            break;
        }
        sum += &t;
    }
    // Omitted terms: below 1 + δ_k each and shrinking geometrically by ≥ 2.
    total = log2_add(total, 1.0 + log2_add(0.0, delta));
    let rounding = total - log2_big(&sum);
    // Γ(x, N)/Γ(x) ≤ 2.3 N^{x−1} e^{−N} for N ≥ 2x; Γ(x) ≥ 0.885.
    let tail = 1.21 + (x - 1.0) * (n as f64).log2() - n as f64 * std::f64::consts::LOG2_E;
    (sum, log2_add(rounding, tail))
}

/// N large enough that the incomplete-Γ tail is below 2^{−w−8} for all arguments ≤ x_max.
fn choose_n(w: u32, x_max: f64) -> u64 {
    let mut n = (w as f64 / std::f64::consts::LOG2_E) as u64 + 8;
    n = n.max((2.0 * x_max).ceil() as u64);
    while 1.21 + (x_max - 1.0).max(0.0) * (n as f64).log2() - n as f64 * std::f64::consts::LOG2_E > -(w as f64) - 8.0 {
        n += 1;
    }
    n
}

/// Evaluate the product at L, p with about `bits` correct bits.
pub fn sfactor(l: u32, p: u32, bits: u32) -> Result<SFactor, CombinError> {
    if !(MIN_BITS..=MAX_BITS).contains(&bits) {
        return Err(CombinError::Budget(format!("precision {bits} bits outside {MIN_BITS}..={MAX_BITS}")));
    }
    if l == 0 || 2 * p + 1 > l {
        return Err(CombinError::OutOfDomain(format!("need 0 ≤ p ≤ (L−1)/2, got L={l}, p={p}")));
    }
    let w = bits + 32 + 2 * (32 - p.leading_zeros());
    // Arguments as (numerator, denominator).
    let (lu, mut up, mut down) = (l as u64, Vec::new(), Vec::new());
    for j in 1..=p as u64 {
        up.extend([(lu - j + 1, 1), (2 * lu + 2 * j + 3, 6), (lu - 2 * j + 3, 3)]);
        down.extend([(lu - 2 * j + 1, 1), (2 * j + 1, 2), (2 * lu - j + 3, 3)]);
    }
    let x_max = up.iter().chain(&down).map(|&(a, d)| a as f64 / d as f64).fold(1.0, f64::max);
    let n = choose_n(w, x_max);

    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut err = f64::NEG_INFINITY;
    for &(a, d) in &up {
        let (s, e) = series(a, d, n, w);
        num *= s;
        err = log2_add(err, e);
    }
    for &(a, d) in &down {
        let (s, e) = series(a, d, n, w);
        den *= s;
        err = log2_add(err, e);
    }
    // Quotients of (1 ± ε) factors: relative error ≤ 1.01 Σ ε while Σ ε ≪ 1.
    err += 0.015;

    // 2^{e/3} = 2^q · 2^{r/3}; the cube root is rounded down to w fraction bits.
    let e = 2 * p * (l - p - 1);
    let (q, r) = (e / 3, e % 3);
    let cube = BigInt::one() << (3 * w + r);
    let c = cube.cbrt();
    if r != 0 {
        err = log2_add(err, -(w as f64));
    }

    let mantissa = ((num * c) << q) / den;
    err = log2_add(err, -log2_big(&mantissa));
    Ok(SFactor { l, p, mantissa, scale_bits: w, rel_error_log2: err })
}

impl SFactor {
    pub fn to_f64(&self) -> f64 {
        (log2_big(&self.mantissa) - self.scale_bits as f64).exp2()
    }

    /// Nearest integer to the value.
    pub fn nearest_integer(&self) -> BigInt {
        let half = BigInt::one() << (self.scale_bits - 1);
        (&self.mantissa + half) >> self.scale_bits
    }

    /// log₂ |value − exact| / exact, or −∞ if they agree to every stored bit.
    pub fn rel_error_log2_to(&self, exact: &BigInt) -> f64 {
        let scaled = exact << self.scale_bits;
        let diff = (&self.mantissa - &scaled).abs();
        if diff.is_zero() {
            return f64::NEG_INFINITY;
        }
        log2_big(&diff) - log2_big(&scaled)
    }

    /// The value in decimal, rounded to `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let half = BigInt::one() << (self.scale_bits - 1);
        let scaled: BigInt = (&self.mantissa * BigInt::from(10u32).pow(digits as u32) + half) >> self.scale_bits;
        let s = scaled.magnitude().to_string();
        let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
        let (int, frac) = s.split_at(s.len() - digits);
        let sign = if scaled.sign() == BigSign::Minus { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Upper bound on the relative error, as a power of ten.
    pub fn rel_error_log10(&self) -> f64 {
        self.rel_error_log2 * std::f64::consts::LOG10_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let s = sfactor(4, 1, 128).unwrap();
        assert_eq!(s.nearest_integer(), BigInt::from(3));
        assert!(s.rel_error_log2_to(&BigInt::from(3)) < -100.0);
        assert!(s.rel_error_log2 < -120.0);
        let s = sfactor(6, 2, 128).unwrap();
        assert_eq!(s.nearest_integer(), BigInt::from(26));
        assert_eq!(sfactor(9, 0, 64).unwrap().nearest_integer(), BigInt::one());
        assert!(sfactor(4, 2, 128).is_err());
        assert!(sfactor(4, 1, 4096).is_err());
    }

    #[test]
    fn decimal_output() {
        let s = sfactor(6, 2, 128).unwrap();
        assert_eq!(s.to_decimal(10), "26.0000000000");
        assert!((s.to_f64() - 26.0).abs() < 1e-9);
    }
}
