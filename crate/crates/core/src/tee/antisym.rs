//! Antisymmetrization over u₁..u_p and the truncated identity that turns the
//! ε-sum integrand into a product of Vandermonde-like determinants.

use crate::ring::SparsePoly;

/// All permutations of 0..n in lexicographic order, with their signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i32)>) {
        let n = used.len();
        if cur.len() == n {
            let inversions = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| cur[a] > cur[b]).count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// AS(f) = Σ_σ sign(σ) f(u_{σ(1)}, …, u_{σ(p)}).
pub fn antisymmetrize(f: &SparsePoly, p: usize) -> SparsePoly {
    let mut acc = SparsePoly::zero();
    for (perm, s) in permutations_with_sign(p) {
        let g = f.permute(&perm);
        acc = if s > 0 { acc.add(&g) } else { acc.sub(&g) };
    }
    acc
}

fn u(i: usize) -> SparsePoly {
    SparsePoly::var(i)
}

fn u_inv(i: usize) -> SparsePoly {
    SparsePoly::var_pow(i, -1)
}

fn one() -> SparsePoly {
    SparsePoly::from_int(1)
}

/// The three members of the identity, in the variables u₁..u_p:
///
/// lhs = { Π_{ℓ≤m}(1 − u_ℓu_m) · AS(Π u_ℓ^{1−2ℓ} Π_{ℓ<m}(1 + u_ℓu_m + τu_m)) }_{≤0},
/// mid = AS(Π u_ℓ^{−ℓ}(τ + u_ℓ⁻¹)^{ℓ−1}),
/// rhs = Π u_ℓ⁻¹ Π_{ℓ<m}(u_m⁻¹ − u_ℓ⁻¹)(τ + u_ℓ⁻¹ + u_m⁻¹),
///
/// where {·}_{≤0} keeps the monomials with no positive exponent.
pub fn lemma2_sides(p: usize) -> (SparsePoly, SparsePoly, SparsePoly) {
    let tau = SparsePoly::tau();

    let mut inner = one();
    for l in 0..p {
        inner = inner.mul(&SparsePoly::var_pow(l, 1 - 2 * (l as i32 + 1)));
    }
    for l in 0..p {
        for m in l + 1..p {
            inner = inner.mul(&one().add(&u(l).mul(&u(m))).add(&tau.mul(&u(m))));
        }
    }
    let mut pre = one();
    for l in 0..p {
        for m in l..p {
            pre = pre.mul(&one().sub(&u(l).mul(&u(m))));
        }
    }
    let lhs = pre.mul(&antisymmetrize(&inner, p)).nonpositive_part();

    let mut m_inner = one();
    for l in 0..p {
        let base = tau.add(&u_inv(l));
        let mut f = SparsePoly::var_pow(l, -(l as i32 + 1));
        for _ in 0..l {
            f = f.mul(&base);
        }
        m_inner = m_inner.mul(&f);
    }
    let mid = antisymmetrize(&m_inner, p);

    let mut rhs = one();
    for l in 0..p {
        rhs = rhs.mul(&u_inv(l));
    }
    for l in 0..p {
        for m in l + 1..p {
            rhs = rhs.mul(&u_inv(m).sub(&u_inv(l))).mul(&tau.add(&u_inv(l)).add(&u_inv(m)));
        }
    }
    (lhs, mid, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::TauPoly;

    #[test]
    fn signs() {
        let perms = permutations_with_sign(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i32>(), 0);
        assert_eq!(perms[1], (vec![0, 2, 1], -1));
    }

    #[test]
    fn p_one_is_inverse_variable() {
        let (lhs, mid, rhs) = lemma2_sides(1);
        let want = SparsePoly::monomial(vec![-1], TauPoly::one());
        assert_eq!(lhs, want);
        assert_eq!(mid, want);
        assert_eq!(rhs, want);
    }
}
