use super::scalar::Ring;
use super::RingError;

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, RingError> {
        if data.len() != rows * cols {
            return Err(RingError::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(RingError::DimensionMismatch { expected: c, found: bad.len() });
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Replace row `i` with `row`.
    pub fn with_row(&self, i: usize, row: &[T]) -> Self {
        let mut m = self.clone();
        m.data[i * self.cols..(i + 1) * self.cols].clone_from_slice(row);
        m
    }

    fn require_square(&self) -> Result<usize, RingError> {
        if self.rows != self.cols {
            return Err(RingError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// checked; an inexact one is reported rather than rounded.
    pub fn det(&self) -> Result<T, RingError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num.div_exact(&prev).ok_or(RingError::InexactDivision)?;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Determinant by Laplace expansion along the first row. Exponential; used
    /// only as an independent cross-check for small sizes.
    pub fn det_cofactor(&self) -> Result<T, RingError> {
        let n = self.require_square()?;
        let cols: Vec<usize> = (0..n).collect();
        Ok(self.laplace(0, &cols))
    }

    fn laplace(&self, row: usize, cols: &[usize]) -> T {
        if cols.is_empty() {
            return T::one();
        }
        let mut acc = T::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry.mul(&self.laplace(row + 1, &rest));
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    pub fn mul_matrix(&self, o: &Self) -> Result<Self, RingError> {
        if self.cols != o.rows {
            return Err(RingError::DimensionMismatch { expected: self.cols, found: o.rows });
        }
        Ok(Self::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc.add(&self.get(i, k).mul(o.get(k, j))))
        }))
    }

    /// Select the given columns, in order.
    pub fn columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Select the given rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }
}

/// Both sides of the row-exchange Plücker relation
/// |A||B| = Σ_j |A₁..A_{n−1}, B_j| · |B₁..B_{j−1}, A_n, B_{j+1}..B_n|
/// where A_i, B_j are rows.
pub fn pluecker_sides<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Result<(T, T), RingError> {
    let n = a.require_square()?;
    if b.require_square()? != n {
        return Err(RingError::DimensionMismatch { expected: n, found: b.rows });
    }
    if n == 0 {
        return Ok((T::one(), T::one()));
    }
    let lhs = a.det()?.mul(&b.det()?);
    let mut rhs = T::zero();
    for j in 0..n {
        let left = a.with_row(n - 1, b.row(j));
        let right = b.with_row(j, a.row(n - 1));
        rhs = rhs.add(&left.det()?.mul(&right.det()?));
    }
    Ok((lhs, rhs))
}

/// True iff the Plücker relation holds exactly for the pair.
pub fn pluecker_check<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool, RingError> {
    let (l, r) = pluecker_sides(a, b)?;
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::laurent::{tp, TauPoly};
    use num_bigint::BigInt;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(Matrix::<BigInt>::identity(0).det().unwrap(), BigInt::from(1));
        assert_eq!(int_matrix(&[&[0, 1], &[1, 0]]).det().unwrap(), BigInt::from(-1));
        let m = Matrix::from_rows(vec![vec![tp(&[(0, 2), (2, 1)])]]).unwrap();
        assert_eq!(m.det().unwrap(), tp(&[(0, 2), (2, 1)]));
        let z = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert_eq!(z.det().unwrap(), BigInt::from(0));
    }

    #[test]
    fn needs_pivoting() {
        let m = int_matrix(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-6));
        assert_eq!(m.det_cofactor().unwrap(), BigInt::from(-6));
    }

    #[test]
    fn non_square_rejected() {
        let m = Matrix::<BigInt>::from_fn(2, 3, |_, _| BigInt::from(1));
        assert!(matches!(m.det(), Err(RingError::NotSquare { rows: 2, cols: 3 })));
    }

    #[test]
    fn identity_pluecker() {
        let id = Matrix::<TauPoly>::identity(2);
        assert!(pluecker_check(&id, &id).unwrap());
    }
}
