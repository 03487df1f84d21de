//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are row vectors (`Vec<F::Elem>`); matrices act on the right, so
//! `v * m` is the image of `v`. Subspaces are stored in reduced row echelon
//! form, which makes equality a plain comparison.

mod matrix;
mod subspace;

pub use matrix::{charpoly, image, inverse, kernel, left_kernel, matmul, rref, solve, solve_left, Matrix, Rref};
pub use subspace::{complement, intersect, sum, Subspace};

use crate::field::Field;

pub fn zero_vec<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
    vec![f.zero(); n]
}

pub fn unit_vec<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = zero_vec(f, n);
    v[i] = f.one();
    v
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|a| f.is_zero(a))
}

pub fn add_vec<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn sub_vec<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn scale_vec<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

/// `acc += c * x`
pub fn axpy<F: Field>(f: &F, acc: &mut [F::Elem], c: &F::Elem, x: &[F::Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !f.is_zero(b) {
            *a = f.add(a, &f.mul(c, b));
        }
    }
}

/// Linear combination `sum coeffs[i] * rows[i]`.
pub fn combine<F: Field>(f: &F, coeffs: &[F::Elem], rows: &[Vec<F::Elem>], n: usize) -> Vec<F::Elem> {
    let mut out = zero_vec(f, n);
    for (c, r) in coeffs.iter().zip(rows) {
        axpy(f, &mut out, c, r);
    }
    out
}

/// Scale so the first nonzero entry is 1; zero stays zero.
pub fn normalize_vec<F: Field>(f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
    match v.iter().find(|a| !f.is_zero(a)) {
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero");
            scale_vec(f, &inv, v)
        }
        None => v.to_vec(),
    }
}
