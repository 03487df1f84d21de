use serde_json::Value;

use super::matrix::rref_in_place;
use super::{axpy, zero_vec, Matrix};
use crate::error::{Error, Result};
use crate::field::Field;

/// A subspace of `F^n` held as its RREF basis: nonzero rows, strictly
/// increasing pivot columns, pivots equal to 1 and alone in their column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full<F: Field<Elem = E>>(f: &F, ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| super::unit_vec(f, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span<F: Field<Elem = E>>(f: &F, ambient: usize, vectors: Vec<Vec<E>>) -> Self {
        let mut rows = vectors;
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        let pivots = rref_in_place(f, &mut rows, ambient);
        rows.truncate(pivots.len());
        Self {
            ambient,
            basis: rows,
            pivots,
        }
    }

    /// Trusts that `basis` is already in RREF with the given pivots.
    pub(crate) fn from_rref_unchecked(ambient: usize, basis: Vec<Vec<E>>, pivots: Vec<usize>) -> Self {
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn matrix(&self) -> Matrix<E> {
        Matrix::from_rows_unchecked(self.ambient, self.basis.clone())
    }

    /// Coordinates of `v` in the RREF basis, assuming `v` lies in the space.
    pub fn coords(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Reduce `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn residue<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !f.is_zero(&r[p]) {
                let c = f.neg(&r[p]);
                axpy(f, &mut r, &c, row);
            }
        }
        r
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        v.len() == self.ambient && super::is_zero_vec(f, &self.residue(f, v))
    }

    pub fn contains_space<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        other.ambient == self.ambient
            && other.dim() <= self.dim()
            && other.basis.iter().all(|v| self.contains(f, v))
    }

    /// `sum coords[i] * basis[i]`
    pub fn vector<F: Field<Elem = E>>(&self, f: &F, coords: &[E]) -> Vec<E> {
        super::combine(f, coords, &self.basis, self.ambient)
    }

    /// Add one vector to the span.
    pub fn extend<F: Field<Elem = E>>(&self, f: &F, v: Vec<E>) -> Self {
        if self.contains(f, &v) {
            return self.clone();
        }
        let mut rows = self.basis.clone();
        rows.push(v);
        Self::span(f, self.ambient, rows)
    }

    pub fn encode<F: Field<Elem = E>>(&self, f: &F) -> Value {
        Value::Array(
            self.basis
                .iter()
                .map(|r| Value::Array(r.iter().map(|a| f.encode(a)).collect()))
                .collect(),
        )
    }

    pub fn decode<F: Field<Elem = E>>(f: &F, ambient: usize, v: &Value) -> Result<Self> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Parse("subspace must be an array of vectors".into()))?;
        let vectors = rows
            .iter()
            .map(|r| {
                let items = r
                    .as_array()
                    .ok_or_else(|| Error::Parse("basis vector must be an array".into()))?;
                if items.len() != ambient {
                    return Err(Error::Parse(format!(
                        "basis vector has {} entries, expected {ambient}",
                        items.len()
                    )));
                }
                items.iter().map(|x| f.decode(x)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::span(f, ambient, vectors))
    }
}

fn check_ambient<E>(u: &Subspace<E>, v: &Subspace<E>) -> Result<()> {
    if u.ambient == v.ambient {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(u.ambient, v.ambient))
    }
}

pub fn sum<F: Field>(f: &F, u: &Subspace<F::Elem>, v: &Subspace<F::Elem>) -> Result<Subspace<F::Elem>> {
    check_ambient(u, v)?;
    if v.contains_space(f, u) {
        return Ok(v.clone());
    }
    let mut rows = u.basis.clone();
    rows.extend(v.basis.iter().filter(|r| !u.contains(f, r)).cloned());
    Ok(Subspace::span(f, u.ambient, rows))
}

/// Zassenhaus: row-reduce `[u | u ; v | 0]`; rows whose left half vanishes
/// carry the intersection in their right half.
pub fn intersect<F: Field>(f: &F, u: &Subspace<F::Elem>, v: &Subspace<F::Elem>) -> Result<Subspace<F::Elem>> {
    check_ambient(u, v)?;
    let n = u.ambient;
    if u.is_zero() || v.is_zero() {
        return Ok(Subspace::zero(n));
    }
    if v.contains_space(f, u) {
        return Ok(u.clone());
    }
    if u.contains_space(f, v) {
        return Ok(v.clone());
    }
    let mut rows: Vec<Vec<F::Elem>> = u
        .basis
        .iter()
        .map(|r| r.iter().chain(r.iter()).cloned().collect())
        .chain(v.basis.iter().map(|r| {
            let mut row = r.clone();
            row.extend(zero_vec(f, n));
            row
        }))
        .collect();
    let pivots = rref_in_place(f, &mut rows, 2 * n);
    let out = rows
        .into_iter()
        .zip(&pivots)
        .filter(|(_, &p)| p >= n)
        .map(|(r, _)| r[n..].to_vec())
        .collect();
    Ok(Subspace::span(f, n, out))
}

/// A complement of `u` inside `w`: rows of `w`'s RREF basis are added in
/// pivot order whenever they are not yet in the span.
pub fn complement<F: Field>(f: &F, u: &Subspace<F::Elem>, w: &Subspace<F::Elem>) -> Result<Subspace<F::Elem>> {
    check_ambient(u, w)?;
    if !w.contains_space(f, u) {
        return Err(Error::NotContained);
    }
    let mut acc = u.clone();
    let mut chosen = Vec::new();
    for row in &w.basis {
        if acc.dim() == w.dim() {
            break;
        }
        if !acc.contains(f, row) {
            acc = acc.extend(f, row.clone());
            chosen.push(row.clone());
        }
    }
    Ok(Subspace::span(f, u.ambient, chosen))
}
