//! T(L,p,k) as a generating function of two families of nonintersecting
//! lattice paths with common endpoints on the line y = 0.
//!
//! Family one: path ℓ starts at (ℓ, ℓ+k−1) and takes steps (1,−1) or (0,−1)
//! down to y = 0. Family two: path ℓ starts at (ℓ−k′, −ℓ−k′) and takes steps
//! (1,1) or (0,1) up to y = 0; each vertical step there carries τ². Paths of
//! one family share no vertex, and path ℓ of both families ends at the same point.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;

use crate::ring::{binomial, Matrix, TauPoly};

use super::CombinError;

/// Start points of both families for (L, p, k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    pub l: i64,
    pub p: i64,
    pub k: i64,
    pub kprime: i64,
    pub starts_down: Vec<(i64, i64)>,
    pub starts_up: Vec<(i64, i64)>,
}

impl PathFamily {
    pub fn new(l: i64, p: i64, k: i64) -> Self {
        let kp = l - 2 * p - k;
        PathFamily {
            l,
            p,
            k,
            kprime: kp,
            starts_down: (1..=p).map(|e| (e, e + k - 1)).collect(),
            starts_up: (1..=p).map(|e| (e - kp, -e - kp)).collect(),
        }
    }
}

/// Σ over p-subsets r₁<…<r_p of det(C(ℓ+k−1, r_m−ℓ)) · det(C(ℓ+k′, 2ℓ−r_m) τ^{2(2ℓ−r_m)}).
pub fn lgv_tee(l: i64, p: i64, k: i64) -> TauPoly {
    if p <= 0 {
        return TauPoly::one();
    }
    let kp = l - 2 * p - k;
    let n = p as usize;
    let r_max = 2 * p;
    let a = |ell: i64, r: i64| TauPoly::constant(binomial(ell + k - 1, r - ell));
    let b = |r: i64, m: i64| TauPoly::monomial((2 * (2 * m - r)) as i32, binomial(m + kp, 2 * m - r));
    let mut total = TauPoly::zero();
    for subset in subsets(r_max as usize + 1, n) {
        let rs: Vec<i64> = subset.iter().map(|&x| x as i64).collect();
        let da = Matrix::from_fn(n, n, |i, j| a(i as i64 + 1, rs[j])).det().expect("square");
        if da.is_zero() {
            continue;
        }
        let db = Matrix::from_fn(n, n, |i, j| b(rs[i], j as i64 + 1)).det().expect("square");
        total = &total + &(&da * &db);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// One path: its vertices, the x-coordinate where it meets y = 0, and the
/// number of weighted steps.
struct Path {
    vertices: Vec<(i64, i64)>,
    end: i64,
    weight: u32,
}

fn paths_from(start: (i64, i64), dir: i64, weight_vertical: bool) -> Vec<Path> {
    fn rec(x: i64, y: i64, dir: i64, wv: bool, verts: &mut Vec<(i64, i64)>, w: u32, out: &mut Vec<Path>) {
        if y == 0 {
            out.push(Path { vertices: verts.clone(), end: x, weight: w });
            return;
        }
        for (dx, weighted) in [(1, false), (0, wv)] {
            let next = (x + dx, y + dir);
            verts.push(next);
            rec(next.0, next.1, dir, wv, verts, w + weighted as u32, out);
            verts.pop();
        }
    }
    let mut out = Vec::new();
    let mut verts = vec![start];
    rec(start.0, start.1, dir, weight_vertical, &mut verts, 0, &mut out);
    out
}

/// Vertex-disjoint choices, one path per start, keyed by the tuple of endpoints.
fn disjoint_families(per_start: &[Vec<Path>]) -> BTreeMap<Vec<i64>, BTreeMap<u32, u64>> {
    fn rec(
        idx: usize,
        per_start: &[Vec<Path>],
        used: &mut HashSet<(i64, i64)>,
        ends: &mut Vec<i64>,
        w: u32,
        out: &mut BTreeMap<Vec<i64>, BTreeMap<u32, u64>>,
    ) {
        if idx == per_start.len() {
            *out.entry(ends.clone()).or_default().entry(w).or_default() += 1;
            return;
        }
        for path in &per_start[idx] {
            if path.vertices.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(path.vertices.iter().copied());
            ends.push(path.end);
            rec(idx + 1, per_start, used, ends, w + path.weight, out);
            ends.pop();
            for v in &path.vertices {
                used.remove(v);
            }
        }
    }
    let mut out = BTreeMap::new();
    rec(0, per_start, &mut HashSet::new(), &mut Vec::new(), 0, &mut out);
    out
}

/// Largest p·(path length) for which [`path_count`] runs.
pub const PATH_BUDGET: i64 = 40;

/// T(L,p,k) by direct enumeration of both path families.
pub fn path_count(l: i64, p: i64, k: i64) -> Result<TauPoly, CombinError> {
    if p <= 0 {
        return Ok(TauPoly::one());
    }
    let fam = PathFamily::new(l, p, k);
    if k < 0 || fam.kprime < 0 {
        return Err(CombinError::OutOfDomain(format!("k={k}, k′={} must be ≥ 0", fam.kprime)));
    }
    let longest = p + k.max(fam.kprime);
    if p * longest > PATH_BUDGET {
        return Err(CombinError::Budget(format!("path enumeration for (L,p,k)=({l},{p},{k})")));
    }
    let down: Vec<Vec<Path>> = fam.starts_down.iter().map(|&s| paths_from(s, -1, false)).collect();
    let up: Vec<Vec<Path>> = fam.starts_up.iter().map(|&s| paths_from(s, 1, true)).collect();
    let f1 = disjoint_families(&down);
    let f2 = disjoint_families(&up);
    let mut total = TauPoly::zero();
    for (ends, c1) in &f1 {
        let n1: u64 = c1.values().sum();
        if let Some(ws) = f2.get(ends) {
            let poly = TauPoly::from_terms(ws.iter().map(|(&w, &c)| (2 * w as i32, BigInt::from(c * n1))));
            total = &total + &poly;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tp;
    use crate::tee::tee;

    #[test]
    fn small_cases() {
        assert_eq!(lgv_tee(5, 0, 2), TauPoly::one());
        assert_eq!(lgv_tee(4, 1, 2), tp(&[(0, 2), (2, 1)]));
        assert_eq!(path_count(4, 1, 2).unwrap(), tp(&[(0, 2), (2, 1)]));
        assert_eq!(path_count(6, 2, 1).unwrap(), tee(6, 2, 1));
        assert_eq!(lgv_tee(13, 4, 3), tee(13, 4, 3));
        let f = PathFamily::new(13, 4, 3);
        assert_eq!(f.kprime, 2);
        assert_eq!(f.starts_up[0], (-1, -3));
    }
}
