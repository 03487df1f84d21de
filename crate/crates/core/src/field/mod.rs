//! Exact scalar fields: the rationals, prime fields and small extension fields.
//!
//! Linear algebra and Lie algebra code is generic over [`Field`]; the field
//! value is a context object that performs the arithmetic, elements are plain
//! data. [`Scalar`] wraps an element together with its field for callers that
//! want checked, self-describing values.

mod finite;
mod poly;
mod rational;
mod scalar;
mod spec;

pub use finite::FiniteField;
pub use rational::Rationals;
pub use scalar::{enumerate_field, Scalar};
pub use spec::FieldSpec;

use std::fmt::Debug;
use std::hash::Hash;

use rand::RngCore;
use serde_json::Value;

use crate::error::Result;

/// Arithmetic context for one exact field.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// 0 for the rationals, `p` otherwise.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` if infinite.
    fn order(&self) -> Option<u64>;
    /// All elements in a fixed order, zero first. `None` if infinite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// The unique `b` with `b^p = a`; `None` in characteristic zero.
    fn pth_root(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// A pseudo-random element; small integers over the rationals.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn spec(&self) -> FieldSpec;
    fn encode(&self, a: &Self::Elem) -> Value;
    fn decode(&self, v: &Value) -> Result<Self::Elem>;
    fn display(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// Distinct roots in this field of a polynomial given constant-first.
    /// `None` when the roots cannot be found exactly.
    fn roots(&self, poly: &[Self::Elem]) -> Option<Vec<Self::Elem>> {
        let elems = self.elements()?;
        Some(elems.into_iter().filter(|x| self.is_zero(&eval_poly(self, poly, x))).collect())
    }
}

/// Horner evaluation of a constant-first polynomial.
pub fn eval_poly<F: Field>(f: &F, poly: &[F::Elem], x: &F::Elem) -> F::Elem {
    poly.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

/// A field chosen at runtime, e.g. from a JSON file.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyField {
    Rationals(Rationals),
    Finite(FiniteField),
}

impl AnyField {
    pub fn spec(&self) -> FieldSpec {
        match self {
            AnyField::Rationals(f) => f.spec(),
            AnyField::Finite(f) => f.spec(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            AnyField::Rationals(_) => 0,
            AnyField::Finite(f) => f.characteristic(),
        }
    }
}
