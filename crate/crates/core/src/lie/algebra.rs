use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, axpy, is_zero_vec, zero_vec, Matrix, Subspace};

/// A finite-dimensional Lie algebra given by structure constants.
///
/// The full antisymmetric table `[b_i, b_j]` is stored, so brackets never
/// branch on index order. Construction validates the alternating law and
/// the Jacobi identity on every basis triple.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<F: Field> {
    field: F,
    dim: usize,
    names: Vec<String>,
    table: Vec<Vec<F::Elem>>,
}

/// One entry of a bracket table: `[b_i, b_j] = value`.
pub type BracketEntry<E> = (usize, usize, Vec<E>);

impl<F: Field> LieAlgebra<F> {
    /// Validates and builds an algebra. Absent pairs bracket to zero; an
    /// entry for `(j, i)` is read as `[b_j, b_i]` and must agree with any
    /// entry for `(i, j)` up to sign.
    pub fn new(field: F, dim: usize, brackets: Vec<BracketEntry<F::Elem>>) -> Result<Self> {
        let mut table = vec![None::<Vec<F::Elem>>; dim * dim];
        for (i, j, v) in brackets {
            if i >= dim {
                return Err(Error::IndexOutOfRange(i, dim));
            }
            if j >= dim {
                return Err(Error::IndexOutOfRange(j, dim));
            }
            if v.len() != dim {
                return Err(Error::Shape(format!("bracket [{i},{j}] has {} coefficients, expected {dim}", v.len())));
            }
            if i == j {
                if !is_zero_vec(&field, &v) {
                    return Err(Error::AlternatingViolation(i, j));
                }
                continue;
            }
            let neg: Vec<_> = v.iter().map(|a| field.neg(a)).collect();
            for (slot, val) in [(i * dim + j, v), (j * dim + i, neg)] {
                match &table[slot] {
                    Some(old) if *old != val => return Err(Error::AlternatingViolation(i.min(j), i.max(j))),
                    _ => table[slot] = Some(val),
                }
            }
        }
        let table = table.into_iter().map(|v| v.unwrap_or_else(|| zero_vec(&field, dim))).collect();
        let alg = Self {
            names: default_names(dim),
            field,
            dim,
            table,
        };
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Builds from `[b_i, b_j]` for every ordered pair, as produced by
    /// `bracket` on some basis. Antisymmetry is checked, Jacobi too.
    pub fn from_full_table(field: F, dim: usize, table: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(dim * dim);
        for (idx, v) in table.into_iter().enumerate() {
            entries.push((idx / dim, idx % dim, v));
        }
        Self::new(field, dim, entries)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::Shape(format!("{} names for dimension {}", names.len(), self.dim)));
        }
        self.names = names;
        Ok(self)
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (bi, bj, bk) = (self.unit(i), self.unit(j), self.unit(k));
                    let mut r = self.bracket(&self.bracket(&bi, &bj), &bk);
                    let t2 = self.bracket(&self.bracket(&bj, &bk), &bi);
                    let t3 = self.bracket(&self.bracket(&bk, &bi), &bj);
                    r = linalg::add_vec(&self.field, &linalg::add_vec(&self.field, &r, &t2), &t3);
                    if !is_zero_vec(&self.field, &r) {
                        return Err(Error::JacobiViolation {
                            i,
                            j,
                            k,
                            residual: r.iter().map(|a| self.field.display(a)).collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self, i: usize) -> Vec<F::Elem> {
        linalg::unit_vec(&self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        zero_vec(&self.field, self.dim)
    }

    /// `[b_i, b_j]`
    pub fn structure_constant(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = zero_vec(f, n);
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if i == j || f.is_zero(yj) {
                    continue;
                }
                axpy(f, &mut out, &f.mul(xi, yj), &self.table[i * n + j]);
            }
        }
        out
    }

    /// Matrix of `y -> [y, x]`; row `i` is `[b_i, x]`, so `v * ad(x) = [v, x]`.
    pub fn ad(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        let rows = (0..n)
            .map(|i| {
                let mut row = zero_vec(f, n);
                for (j, xj) in x.iter().enumerate() {
                    if i != j && !f.is_zero(xj) {
                        axpy(f, &mut row, xj, &self.table[i * n + j]);
                    }
                }
                row
            })
            .collect();
        Matrix::from_rows_unchecked(n, rows)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vec(&self.field, v))
    }

    pub fn full(&self) -> Subspace<F::Elem> {
        Subspace::full(&self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace<F::Elem> {
        Subspace::zero(self.dim)
    }

    pub fn span(&self, vectors: Vec<Vec<F::Elem>>) -> Subspace<F::Elem> {
        Subspace::span(&self.field, self.dim, vectors)
    }

    pub fn sum(&self, u: &Subspace<F::Elem>, v: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        linalg::sum(&self.field, u, v).expect("same ambient")
    }

    pub fn intersect(&self, u: &Subspace<F::Elem>, v: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        linalg::intersect(&self.field, u, v).expect("same ambient")
    }

    pub fn contains(&self, u: &Subspace<F::Elem>, v: &Subspace<F::Elem>) -> bool {
        u.contains_space(&self.field, v)
    }

    /// Span of `[u_a, v_b]` over basis vectors.
    pub fn bracket_spaces(&self, u: &Subspace<F::Elem>, v: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let mut out = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                let c = self.bracket(a, b);
                if !is_zero_vec(&self.field, &c) {
                    out.push(c);
                }
            }
        }
        self.span(out)
    }

    pub fn is_subalgebra(&self, u: &Subspace<F::Elem>) -> bool {
        let b = u.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| u.contains(&self.field, &self.bracket(&b[i], &b[j]))))
    }

    pub fn is_ideal(&self, u: &Subspace<F::Elem>) -> bool {
        u.basis()
            .iter()
            .all(|x| self.ad(x).rows().iter().all(|r| u.contains(&self.field, r)))
    }

    pub fn is_abelian_space(&self, u: &Subspace<F::Elem>) -> bool {
        self.bracket_spaces(u, u).is_zero()
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("b{i}")).collect()
}
