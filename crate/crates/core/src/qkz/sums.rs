//! Partial sums S_±(L,p) over the restricted families, and their
//! ε-sequence form S(L,p|t) built directly from the integrals ψ̄.

use std::collections::BTreeSet;

use crate::ring::{QTauPoly, TauPoly};

use super::dyck::{c_value, in_family, ptilde, restricted_family, DyckPath};
use super::integral::IntegrandTable;
use super::solve::{solve_psi, PsiVector};
use super::{QkzError, Sign};

/// ε₁..ε_p ∈ {0,1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsilonSequence {
    eps: Vec<u8>,
}

impl EpsilonSequence {
    pub fn new(eps: Vec<u8>) -> Result<Self, QkzError> {
        if eps.iter().any(|&e| e > 1) {
            return Err(QkzError::InvalidSequence(format!("ε={eps:?}: entries must be 0 or 1")));
        }
        Ok(EpsilonSequence { eps })
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eps.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.eps[i]
    }

    pub fn weight(&self) -> u32 {
        self.eps.iter().map(|&e| e as u32).sum()
    }

    /// All 2^p sequences of length p, in binary counting order.
    pub fn all(p: usize) -> Vec<EpsilonSequence> {
        (0..1u64 << p)
            .map(|m| EpsilonSequence { eps: (0..p).map(|i| ((m >> (p - 1 - i)) & 1) as u8).collect() })
            .collect()
    }
}

/// S_±(L,p) = Σ_{α∈D_{L,p}} τ^{±c_{α,p}} ψ_α from a solved component vector.
pub fn partial_sum_with(psi: &PsiVector, p: usize, sign: Sign) -> Result<TauPoly, QkzError> {
    let fam = restricted_family(psi.l, p)?;
    let mut acc = TauPoly::zero();
    for alpha in &fam.members {
        let c = c_value(alpha, p)? as i32;
        let v = psi.get(alpha).ok_or_else(|| QkzError::Internal(format!("no component for {alpha}")))?;
        acc = &acc + &v.shift(sign.as_i32() * c);
    }
    Ok(acc)
}

/// S_±(L,p), solving for the components first.
pub fn partial_sum(l: usize, p: usize, sign: Sign) -> Result<TauPoly, QkzError> {
    ptilde(l, p)?;
    partial_sum_with(&solve_psi(l)?, p, sign)
}

/// The exponent sequence b attached to ε for (L,p).
///
/// Even L = 2n: b = (1, …, p̃+1, p̃+3−ε₁, p̃+5−ε₂, …).
/// Odd L: b = (1, …, p̃, p̃+2−ε₁, p̃+4−ε₂, …).
pub fn eps_b_sequence(l: usize, p: usize, eps: &EpsilonSequence) -> Result<Vec<u32>, QkzError> {
    let pt = ptilde(l, p)?;
    if eps.len() != p {
        return Err(QkzError::InvalidSequence(format!("ε has length {}, expected p={p}", eps.len())));
    }
    let n = l / 2;
    let head = if l.is_multiple_of(2) { pt + 1 } else { pt };
    let mut b: Vec<u32> = (1..=head as u32).collect();
    for ell in head + 1..=n {
        let j = ell - head - 1;
        let base = if l.is_multiple_of(2) { 2 * ell - pt - 1 } else { 2 * ell - pt };
        b.push((base - eps.get(j) as usize) as u32);
    }
    Ok(b)
}

/// Coefficients of S(L,p|t) as a polynomial in t: entry k is the sum of ψ̄_b
/// over the ε with Σε = k.
pub fn partial_sum_eps_symbolic(l: usize, p: usize) -> Result<Vec<TauPoly>, QkzError> {
    let table = IntegrandTable::new(l)?;
    partial_sum_eps_table(&table, p)
}

fn partial_sum_eps_table(table: &IntegrandTable, p: usize) -> Result<Vec<TauPoly>, QkzError> {
    let mut out = vec![TauPoly::zero(); p + 1];
    for eps in EpsilonSequence::all(p) {
        let b = eps_b_sequence(table.l(), p, &eps)?;
        let w = eps.weight() as usize;
        out[w] = &out[w] + &table.psi_bar(&b)?;
    }
    Ok(out)
}

/// S(L,p|t) = Σ_ε t^{Σε} ψ̄_{b(ε)} at a given t ∈ Q[τ, τ⁻¹].
pub fn partial_sum_eps(l: usize, p: usize, t: &QTauPoly) -> Result<QTauPoly, QkzError> {
    let coeffs = partial_sum_eps_symbolic(l, p)?;
    let mut acc = QTauPoly::zero();
    let mut tk = QTauPoly::one();
    for c in &coeffs {
        acc = &acc + &(&tk * &c.to_rational_coeffs());
        tk = &tk * t;
    }
    Ok(acc)
}

/// The paths of D_{L,p} attached to ε: those whose step at position
/// i_ℓ = L − p̃ − 2ℓ − 1 (shifted by one for odd L) goes up exactly when ε_ℓ = 1.
pub fn eps_class(l: usize, p: usize, eps: &EpsilonSequence, paths: &[DyckPath]) -> Result<Vec<DyckPath>, QkzError> {
    let pt = ptilde(l, p)?;
    if eps.len() != p {
        return Err(QkzError::InvalidSequence(format!("ε has length {}, expected p={p}", eps.len())));
    }
    let off = l % 2;
    let mut out = Vec::new();
    for alpha in paths {
        if alpha.len() != l || !in_family(alpha, p)? {
            continue;
        }
        let ok = (1..=p).all(|ell| {
            let i = l + off - pt - 2 * ell - 1;
            let up = alpha.height(i) < alpha.height(i + 1);
            up == (eps.get(ell - 1) == 1)
        });
        if ok {
            out.push(alpha.clone());
        }
    }
    Ok(out)
}

/// Outcome of checking the ε-class decomposition for one L over every p.
#[derive(Clone, Debug, Default)]
pub struct EpsClassReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// For every p and every ε: ψ̄_{b(ε)} equals the sum of ψ_α over the class of ε,
/// every member has c_{α,p} = Σε, and the classes partition D_{L,p}.
pub fn check_eps_classes(psi: &PsiVector) -> Result<EpsClassReport, QkzError> {
    let l = psi.l;
    let table = IntegrandTable::new(l)?;
    let mut rep = EpsClassReport::default();
    for p in 0..=l.saturating_sub(1) / 2 {
        let fam = restricted_family(l, p)?;
        let mut seen = BTreeSet::new();
        for eps in EpsilonSequence::all(p) {
            rep.checked += 1;
            let class = eps_class(l, p, &eps, &psi.paths)?;
            let sum = class.iter().fold(TauPoly::zero(), |acc, a| &acc + psi.get(a).unwrap());
            let pb = table.psi_bar(&eps_b_sequence(l, p, &eps)?)?;
            if sum != pb {
                rep.failures.push(format!("L={l} p={p} ε={:?}: class sum {sum} ≠ ψ̄ {pb}", eps.eps));
            }
            for a in &class {
                if c_value(a, p)? != eps.weight() {
                    rep.failures.push(format!("L={l} p={p} ε={:?}: {a} has c ≠ Σε", eps.eps));
                }
                if !seen.insert(a.clone()) {
                    rep.failures.push(format!("L={l} p={p}: {a} lies in two classes"));
                }
            }
        }
        if seen.len() != fam.members.len() {
            rep.failures.push(format!("L={l} p={p}: classes cover {} of {} paths", seen.len(), fam.members.len()));
        }
    }
    Ok(rep)
}

/// Paths whose component, divided by its lowest τ power, is not a polynomial
/// in τ² with nonnegative coefficients.
pub fn check_positivity(psi: &PsiVector) -> Vec<DyckPath> {
    psi.iter()
        .filter(|(_, v)| {
            let Some(lo) = v.min_exp() else { return true };
            !v.terms().all(|(e, c)| (e - lo) % 2 == 0 && c.sign() != num_bigint::Sign::Minus)
        })
        .map(|(a, _)| a.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tp;

    #[test]
    fn b_sequences() {
        let e = |v: &[u8]| EpsilonSequence::new(v.to_vec()).unwrap();
        // L=6, p=1: p̃ = 1, b = (1, 2, 4−ε).
        assert_eq!(eps_b_sequence(6, 1, &e(&[0])).unwrap(), vec![1, 2, 4]);
        assert_eq!(eps_b_sequence(6, 1, &e(&[1])).unwrap(), vec![1, 2, 3]);
        assert_eq!(eps_b_sequence(6, 0, &e(&[])).unwrap(), vec![1, 2, 3]);
        assert_eq!(EpsilonSequence::all(2).len(), 4);
    }

    #[test]
    fn table_values() {
        assert_eq!(partial_sum(4, 1, Sign::Minus).unwrap(), tp(&[(0, 2), (2, 1)]));
        assert_eq!(partial_sum(5, 2, Sign::Minus).unwrap(), tp(&[(-2, 1), (0, 5), (2, 4), (4, 1)]));
        assert_eq!(partial_sum(6, 2, Sign::Plus).unwrap(), tp(&[(0, 1), (2, 8), (4, 12), (6, 5)]));
        assert_eq!(partial_sum(6, 1, Sign::Plus).unwrap(), tp(&[(2, 2), (4, 3)]));
    }

    #[test]
    fn eps_form_matches_path_sums() {
        for l in 2..=8 {
            let psi = solve_psi(l).unwrap();
            for p in 0..=(l - 1) / 2 {
                for (sign, t) in [(Sign::Plus, 1), (Sign::Minus, -1)] {
                    let want = partial_sum_with(&psi, p, sign).unwrap();
                    let got = partial_sum_eps(l, p, &TauPoly::tau_pow(t).to_rational_coeffs()).unwrap();
                    assert_eq!(got, want.to_rational_coeffs(), "L={l} p={p} {sign}");
                }
            }
        }
    }

    #[test]
    fn classes_and_positivity() {
        for l in 2..=8 {
            let psi = solve_psi(l).unwrap();
            let rep = check_eps_classes(&psi).unwrap();
            assert!(rep.failures.is_empty(), "{:?}", rep.failures);
            assert!(check_positivity(&psi).is_empty());
        }
    }
}
