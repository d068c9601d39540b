use crate::ring::{tau_qnumber, TauPoly};

use super::dyck::DyckPath;
use super::QkzError;

/// A nondecreasing sequence a₁ ≤ … ≤ a_n in [1, L−1] with n = ⌊L/2⌋, the
/// index set of the integral representation. Its mirror b_ℓ = L − a_{n+1−ℓ}
/// is the exponent form used by the constant-term integrals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AdmissibleSequence {
    l: usize,
    a: Vec<u32>,
}

impl AdmissibleSequence {
    pub fn from_a(l: usize, a: Vec<u32>) -> Result<Self, QkzError> {
        let n = l / 2;
        let bad = |why: &str| QkzError::InvalidSequence(format!("a={a:?}, L={l}: {why}"));
        if a.len() != n {
            return Err(bad("length must be ⌊L/2⌋"));
        }
        if a.windows(2).any(|w| w[0] > w[1]) {
            return Err(bad("must be nondecreasing"));
        }
        if a.iter().any(|&x| x < 1 || x as usize > l - 1) {
            return Err(bad("entries must lie in [1, L−1]"));
        }
        Ok(AdmissibleSequence { l, a })
    }

    pub fn from_b(l: usize, b: &[u32]) -> Result<Self, QkzError> {
        if b.iter().any(|&x| x as usize >= l) {
            return Err(QkzError::InvalidSequence(format!("b={b:?}, L={l}: entries must be < L")));
        }
        Self::from_a(l, b.iter().rev().map(|&x| l as u32 - x).collect())
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> Vec<u32> {
        self.a.iter().rev().map(|&x| self.l as u32 - x).collect()
    }
}

/// Every admissible sequence for size L, in lexicographic order of `a`.
pub fn admissible_sequences(l: usize) -> Vec<AdmissibleSequence> {
    fn rec(l: usize, n: usize, cur: &mut Vec<u32>, out: &mut Vec<AdmissibleSequence>) {
        if cur.len() == n {
            out.push(AdmissibleSequence { l, a: cur.clone() });
            return;
        }
        let start = cur.last().copied().unwrap_or(1);
        for x in start..l as u32 {
            cur.push(x);
            rec(l, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if l >= 2 {
        rec(l, l / 2, &mut Vec::new(), &mut out);
    }
    out
}

/// Which local maximum the recursion removes first. The result does not
/// depend on the choice; both are exposed so that this can be tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeakChoice {
    First,
    Last,
}

/// The coefficient C_{a;α} of ψ_α in ψ_a.
///
/// Remove a local maximum i of α; with k = #{ℓ : a_ℓ = i}, the coefficient is
/// zero for k = 0 and otherwise [k]·C_{a′;α′}, where a′ drops one i and maps
/// the rest by x ↦ x (x < i), i−1 (x = i), x−2 (x > i).
pub fn c_coeff(a: &[u32], alpha: &DyckPath) -> TauPoly {
    c_coeff_with(a, alpha, PeakChoice::First)
}

pub fn c_coeff_with(a: &[u32], alpha: &DyckPath, choice: PeakChoice) -> TauPoly {
    c_rec(a, alpha.heights(), choice)
}

fn c_rec(a: &[u32], h: &[u32], choice: PeakChoice) -> TauPoly {
    let l = h.len() - 1;
    if l <= 1 {
        return if a.is_empty() { TauPoly::one() } else { TauPoly::zero() };
    }
    let mut peaks = (1..l).filter(|&i| h[i - 1] < h[i] && h[i] > h[i + 1]);
    let peak = match choice {
        PeakChoice::First => peaks.next(),
        PeakChoice::Last => peaks.next_back(),
    };
    let Some(i) = peak else {
        return TauPoly::zero();
    };
    let i32_ = i as u32;
    let k = a.iter().filter(|&&x| x == i32_).count() as u32;
    if k == 0 {
        return TauPoly::zero();
    }
    let mut rest: Vec<u32> = a.to_vec();
    let pos = rest.iter().position(|&x| x == i32_).unwrap();
    rest.remove(pos);
    let reduced: Vec<u32> = rest
        .into_iter()
        .map(|x| match x.cmp(&i32_) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => x - 1,
            std::cmp::Ordering::Greater => x - 2,
        })
        .collect();
    let mut shorter = Vec::with_capacity(l - 1);
    shorter.extend_from_slice(&h[..i - 1]);
    shorter.extend_from_slice(&h[i + 1..]);
    let sub = c_rec(&reduced, &shorter, choice);
    if sub.is_zero() {
        return sub;
    }
    &tau_qnumber(k) * &sub
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkz::dyck::enumerate_dyck;

    #[test]
    fn base_cases() {
        let empty = DyckPath::new(vec![0]).unwrap();
        assert_eq!(c_coeff(&[], &empty), TauPoly::one());
        let up = DyckPath::new(vec![0, 1]).unwrap();
        assert_eq!(c_coeff(&[], &up), TauPoly::one());
    }

    #[test]
    fn maximal_path_l4() {
        let top = DyckPath::maximal(4);
        assert_eq!(c_coeff(&[1, 2], &top), TauPoly::one());
        // No entry at the peak position 2.
        assert_eq!(c_coeff(&[1, 1], &top), TauPoly::zero());
    }

    #[test]
    fn peak_choice_is_irrelevant() {
        for l in 2..=8 {
            for a in admissible_sequences(l) {
                for alpha in enumerate_dyck(l) {
                    assert_eq!(
                        c_coeff_with(a.a(), &alpha, PeakChoice::First),
                        c_coeff_with(a.a(), &alpha, PeakChoice::Last),
                        "a={:?} alpha={alpha:?}",
                        a.a()
                    );
                }
            }
        }
    }

    #[test]
    fn sequence_mirror() {
        let s = AdmissibleSequence::from_a(6, vec![2, 4, 5]).unwrap();
        assert_eq!(s.b(), vec![1, 2, 4]);
        assert_eq!(AdmissibleSequence::from_b(6, &[1, 2, 4]).unwrap(), s);
        assert!(AdmissibleSequence::from_a(6, vec![3, 2, 5]).is_err());
        assert!(AdmissibleSequence::from_a(6, vec![0, 2, 5]).is_err());
        assert_eq!(admissible_sequences(4).len(), 6);
    }
}
