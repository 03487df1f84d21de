use super::{axpy, zero_vec};
use crate::error::{Error, Result};
use crate::field::Field;

/// A dense matrix stored as a list of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    cols: usize,
    rows: Vec<Vec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!("row of length {} in a {cols}-column matrix", r.len())));
        }
        Ok(Self { cols, rows })
    }

    /// Like [`Matrix::from_rows`] for rows already known to have `cols` entries.
    pub(crate) fn from_rows_unchecked(cols: usize, rows: Vec<Vec<E>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Self { cols, rows }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self {
            cols,
            rows: vec![vec![value; cols]; rows],
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<E>> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.rows[i][j] = value;
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Self {
            cols: self.rows.len(),
            rows,
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Shape(format!("cannot stack {} and {} columns", self.cols, other.cols)));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self { cols: self.cols, rows })
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn augment(&self, other: &Self) -> Result<Self> {
        if self.rows.len() != other.rows.len() {
            return Err(Error::Shape(format!(
                "cannot augment {} rows with {}",
                self.rows.len(),
                other.rows.len()
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Ok(Self {
            cols: self.cols + other.cols,
            rows,
        })
    }
}

impl<E: Clone> Matrix<E> {
    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let rows = (0..n).map(|i| super::unit_vec(f, n, i)).collect();
        Self { cols: n, rows }
    }

    pub fn zero<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, f.zero())
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.rows.iter().all(|r| super::is_zero_vec(f, r))
    }

    /// Row vector times matrix.
    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut out = zero_vec(f, self.cols);
        for (c, r) in v.iter().zip(&self.rows) {
            axpy(f, &mut out, c, r);
        }
        out
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| super::add_vec(f, a, b))
            .collect();
        Self { cols: self.cols, rows }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| super::sub_vec(f, a, b))
            .collect();
        Self { cols: self.cols, rows }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        let rows = self.rows.iter().map(|r| super::scale_vec(f, c, r)).collect();
        Self { cols: self.cols, rows }
    }

    pub fn trace<F: Field<Elem = E>>(&self, f: &F) -> E {
        (0..self.cols.min(self.rows.len())).fold(f.zero(), |acc, i| f.add(&acc, &self.rows[i][i]))
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, e: u32) -> Self {
        let mut acc = Self::identity(f, self.cols);
        for _ in 0..e {
            acc = matmul(f, &acc, self);
        }
        acc
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        rref(f, self).rank()
    }
}

pub fn matmul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows.len(), "matmul shape mismatch");
    let rows = a.rows.iter().map(|r| b.apply(f, r)).collect();
    Matrix { cols: b.cols, rows }
}

/// Reduced row echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E> Rref<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination. The returned matrix has the same shape as `m`
/// with zero rows at the bottom.
pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut rows = m.rows.clone();
    let pivots = rref_in_place(f, &mut rows, m.cols);
    Rref {
        matrix: Matrix { cols: m.cols, rows },
        pivots,
    }
}

pub(crate) fn rref_in_place<F: Field>(f: &F, rows: &mut [Vec<F::Elem>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = f.inv(&rows[r][c]).expect("pivot is nonzero");
        if !f.is_one(&inv) {
            for x in rows[r].iter_mut().skip(c) {
                *x = f.mul(x, &inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !f.is_zero(&row[c]) {
                let factor = f.neg(&row[c]);
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !f.is_zero(y) {
                        *x = f.add(x, &f.mul(&factor, y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel `{x : m x = 0}`, as row vectors.
pub fn kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> super::Subspace<F::Elem> {
    let Rref { matrix, pivots } = rref(f, m);
    let n = m.cols;
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(f, n);
        v[free] = f.one();
        for (row, &p) in matrix.rows.iter().zip(&pivots) {
            v[p] = f.neg(&row[free]);
        }
        basis.push(v);
    }
    super::Subspace::span(f, n, basis)
}

/// `{v : v m = 0}`.
pub fn left_kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> super::Subspace<F::Elem> {
    kernel(f, &m.transpose())
}

/// Column space of `m`.
pub fn image<F: Field>(f: &F, m: &Matrix<F::Elem>) -> super::Subspace<F::Elem> {
    super::Subspace::span(f, m.rows.len(), m.transpose().rows)
}

/// One solution of `m x = rhs`.
pub fn solve<F: Field>(f: &F, m: &Matrix<F::Elem>, rhs: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if rhs.len() != m.rows.len() {
        return Err(Error::Shape(format!(
            "right-hand side has {} entries for {} equations",
            rhs.len(),
            m.rows.len()
        )));
    }
    let mut rows: Vec<Vec<F::Elem>> = m
        .rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref_in_place(f, &mut rows, m.cols + 1);
    if pivots.last() == Some(&m.cols) {
        return Err(Error::NoSolution);
    }
    let mut x = zero_vec(f, m.cols);
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[m.cols].clone();
    }
    Ok(x)
}

/// One solution of `x m = rhs`.
pub fn solve_left<F: Field>(f: &F, m: &Matrix<F::Elem>, rhs: &[F::Elem]) -> Result<Vec<F::Elem>> {
    solve(f, &m.transpose(), rhs)
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let n = m.cols;
    if m.rows.len() != n {
        return Err(Error::Shape("inverse of a non-square matrix".into()));
    }
    let aug = m.augment(&Matrix::identity(f, n))?;
    let Rref { matrix, pivots } = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::NoSolution);
    }
    let rows = matrix.rows.into_iter().map(|r| r[n..].to_vec()).collect();
    Ok(Matrix { cols: n, rows })
}

/// Characteristic polynomial `det(xI - m)`, constant-first, monic, by the
/// division-free Berkowitz recurrence.
pub fn charpoly<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let n = m.cols;
    assert_eq!(m.rows.len(), n, "charpoly of a non-square matrix");
    // Berkowitz builds coefficients highest-degree first.
    let mut poly = vec![f.one()];
    for k in 0..n {
        // Leading k x k block A, column c = A[0..k][k], row r = A[k][0..k], a = A[k][k].
        let a = m.rows[k][k].clone();
        let r: Vec<_> = m.rows[k][..k].to_vec();
        let c: Vec<_> = (0..k).map(|i| m.rows[i][k].clone()).collect();
        // Toeplitz column: 1, -a, -r c, -r A c, -r A^2 c, ...
        let mut t = vec![f.one(), f.neg(&a)];
        let mut v = c;
        for _ in 0..k {
            let rv = r.iter().zip(&v).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)));
            t.push(f.neg(&rv));
            v = (0..k)
                .map(|i| {
                    (0..k).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(&m.rows[i][j], &v[j])))
                })
                .collect();
        }
        // new poly = T * poly where T is (k+2) x (k+1) lower-triangular Toeplitz.
        let mut next = vec![f.zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in poly.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    *slot = f.add(slot, &f.mul(&t[i - j], pj));
                }
            }
        }
        poly = next;
    }
    poly.reverse();
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};
    use num_rational::BigRational;

    fn q(rows: &[&[i64]]) -> Matrix<BigRational> {
        let f = Rationals;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = Rationals;
        let id = q(&[&[1, 0], &[0, 1]]);
        let r = rref(&f, &id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank(), 2);
        let r = rref(&f, &q(&[&[1, 1], &[1, 1]]));
        assert_eq!(r.matrix, q(&[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank(), 1);
        assert_eq!(rref(&f, &q(&[&[0, 0], &[0, 0]])).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        let f = Rationals;
        let k = kernel(&f, &q(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, crate::linalg::Subspace::span(&f, 2, vec![vec![f.one(), f.from_i64(-1)]]));
        assert_eq!(kernel(&f, &q(&[&[1, 0], &[0, 1]])).dim(), 0);
        assert_eq!(kernel(&f, &q(&[&[0, 0], &[0, 0]])).dim(), 2);
    }

    #[test]
    fn solve_and_inverse() {
        let f = Rationals;
        let m = q(&[&[2, 1], &[1, 3]]);
        let x = solve(&f, &m, &[f.from_i64(3), f.from_i64(4)]).unwrap();
        assert_eq!(x, vec![f.one(), f.one()]);
        let inv = inverse(&f, &m).unwrap();
        assert_eq!(matmul(&f, &m, &inv), Matrix::identity(&f, 2));
        assert_eq!(solve(&f, &q(&[&[1, 1], &[1, 1]]), &[f.one(), f.zero()]), Err(Error::NoSolution));
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let f = Rationals;
        // [[1,2],[3,4]]: x^2 - 5x - 2
        let p = charpoly(&f, &q(&[&[1, 2], &[3, 4]]));
        assert_eq!(p, vec![f.from_i64(-2), f.from_i64(-5), f.one()]);
        // cyclic shift on GF(3)^3: x^3 - 1
        let g = FiniteField::prime(3).unwrap();
        let shift = Matrix::from_rows(3, vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap();
        assert_eq!(charpoly(&g, &shift), vec![2, 0, 0, 1]);
    }
}
