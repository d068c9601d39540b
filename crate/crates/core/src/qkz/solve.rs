use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::ring::{Ring, TauPoly};

use super::coeff::{admissible_sequences, c_coeff};
use super::dyck::{enumerate_dyck, DyckPath};
use super::integral::IntegrandTable;
use super::QkzError;

/// The components ψ_α for every Dyck path of one size, in path order.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiVector {
    pub l: usize,
    pub paths: Vec<DyckPath>,
    pub values: Vec<TauPoly>,
}

impl PsiVector {
    pub fn get(&self, alpha: &DyckPath) -> Option<&TauPoly> {
        self.paths.binary_search(alpha).ok().map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DyckPath, &TauPoly)> {
        self.paths.iter().zip(&self.values)
    }

    /// `{"L": 6, "components": {"UUDUDD": <TauPoly>, ...}}`
    pub fn to_json(&self) -> Value {
        let mut comps = Map::new();
        for (p, v) in self.iter() {
            comps.insert(p.steps(), v.to_json());
        }
        serde_json::json!({ "L": self.l, "components": comps })
    }
}

type Row = BTreeMap<usize, TauPoly>;

struct Equation {
    coeffs: Row,
    rhs: TauPoly,
}

impl Equation {
    // self ← s·self − f·other, dropping cancelled entries.
    fn combine(&mut self, s: &TauPoly, f: &TauPoly, other: &Equation) {
        if !s.is_one() {
            for v in self.coeffs.values_mut() {
                *v = &*v * s;
            }
            self.rhs = &self.rhs * s;
        }
        for (&c, v) in &other.coeffs {
            let term = f * v;
            let slot = self.coeffs.entry(c).or_insert_with(TauPoly::zero);
            *slot = &*slot - &term;
            if slot.is_zero() {
                self.coeffs.remove(&c);
            }
        }
        self.rhs = &self.rhs - &(f * &other.rhs);
    }
}

/// Solve for every ψ_α of size L.
///
/// Each nondecreasing sequence a gives one equation ψ̄_{b(a)} = Σ_α C_{a;α} ψ_α.
/// The full rectangular system is reduced by Gauss–Jordan elimination, which
/// prefers monomial pivots so that the work stays inside Z[τ, τ⁻¹]; any other
/// pivot is handled fraction-free. The system must have full column rank,
/// every surplus equation must reduce to 0 = 0, and the solution is checked
/// against every original equation before it is returned.
pub fn solve_psi(l: usize) -> Result<PsiVector, QkzError> {
    if l < 2 {
        return Err(QkzError::LTooSmall { l, min: 2 });
    }
    let paths = enumerate_dyck(l);
    let table = IntegrandTable::new(l)?;
    let seqs = admissible_sequences(l);
    let equations: Vec<Equation> = seqs
        .par_iter()
        .map(|s| -> Result<Option<Equation>, QkzError> {
            let coeffs: Row = paths
                .iter()
                .enumerate()
                .filter_map(|(j, alpha)| {
                    let c = c_coeff(s.a(), alpha);
                    (!c.is_zero()).then_some((j, c))
                })
                .collect();
            if coeffs.is_empty() {
                return Ok(None);
            }
            Ok(Some(Equation { coeffs, rhs: table.psi_bar(&s.b())? }))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();

    let n = paths.len();
    let mut work: Vec<Equation> =
        equations.iter().map(|e| Equation { coeffs: e.coeffs.clone(), rhs: e.rhs.clone() }).collect();
    let mut used = vec![false; work.len()];
    let mut pivot_row = vec![usize::MAX; n];
    for col in 0..n {
        let candidates = (0..work.len()).filter(|&r| !used[r] && work[r].coeffs.contains_key(&col));
        let mut chosen: Option<(usize, bool)> = None;
        for r in candidates {
            let unit = work[r].coeffs[&col].is_unit();
            // Among monomial pivots prefer the sparsest row.
            let better = match chosen {
                None => true,
                Some((cr, cu)) => {
                    (unit && !cu) || (unit == cu && work[r].coeffs.len() < work[cr].coeffs.len())
                }
            };
            if better {
                chosen = Some((r, unit));
            }
        }
        let Some((pr, _)) = chosen else {
            let rank = pivot_row.iter().filter(|&&r| r != usize::MAX).count();
            return Err(QkzError::RankDeficient { l, rank, unknowns: n });
        };
        used[pr] = true;
        pivot_row[col] = pr;
        let pivot = std::mem::replace(&mut work[pr], Equation { coeffs: Row::new(), rhs: TauPoly::zero() });
        let pv = pivot.coeffs[&col].clone();
        let unit = pv.is_unit();
        work.par_iter_mut().enumerate().for_each(|(r, eq)| {
            if r == pr {
                return;
            }
            if let Some(f) = eq.coeffs.get(&col).cloned() {
                if unit {
                    let f = f.div_exact(&pv).expect("monomial divides");
                    eq.combine(&TauPoly::one(), &f, &pivot);
                } else {
                    eq.combine(&pv, &f, &pivot);
                }
            }
        });
        work[pr] = pivot;
    }

    for (r, eq) in work.iter().enumerate() {
        if !used[r] && (!eq.coeffs.is_empty() || !eq.rhs.is_zero()) {
            return Err(QkzError::Inconsistent { l, detail: format!("surplus equation {r} reduces to nonzero") });
        }
    }
    let mut values = Vec::with_capacity(n);
    for (col, &pr) in pivot_row.iter().enumerate() {
        let eq = &work[pr];
        if eq.coeffs.len() != 1 {
            return Err(QkzError::Internal(format!("pivot row for column {col} not reduced")));
        }
        let v = eq.rhs.div_exact(&eq.coeffs[&col]).ok_or_else(|| QkzError::Inconsistent {
            l,
            detail: format!("component {} is not a Laurent polynomial", paths[col]),
        })?;
        values.push(v);
    }

    for (k, eq) in equations.iter().enumerate() {
        let lhs = eq.coeffs.iter().fold(TauPoly::zero(), |acc, (&j, c)| &acc + &(c * &values[j]));
        if lhs != eq.rhs {
            return Err(QkzError::Inconsistent { l, detail: format!("equation {k} fails on re-substitution") });
        }
    }
    Ok(PsiVector { l, paths, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tp;

    fn comp(v: &PsiVector, word: &str) -> TauPoly {
        v.get(&DyckPath::from_steps(word).unwrap()).unwrap().clone()
    }

    #[test]
    fn small_sizes() {
        let v = solve_psi(4).unwrap();
        assert_eq!(comp(&v, "UDUD"), tp(&[(0, 1), (2, 1)]));
        assert_eq!(comp(&v, "UUDD"), tp(&[(1, 1)]));
        let v = solve_psi(5).unwrap();
        assert!(v.values.contains(&tp(&[(2, 2), (4, 1)])));
        let v = solve_psi(6).unwrap();
        assert_eq!(comp(&v, "UDUDUD"), tp(&[(0, 1), (2, 5), (4, 4), (6, 1)]));
    }

    #[test]
    fn maximal_component_normalised() {
        for l in 2..=8 {
            let v = solve_psi(l).unwrap();
            let n = l / 2;
            assert_eq!(v.get(&DyckPath::maximal(l)).unwrap(), &TauPoly::tau_pow((n * (n - 1) / 2) as i32));
        }
    }

    #[test]
    fn json_keys_are_step_words() {
        let v = solve_psi(4).unwrap();
        let j = v.to_json();
        assert!(j["components"]["UUDD"].is_object());
    }
}
