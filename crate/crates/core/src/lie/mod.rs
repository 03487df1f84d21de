//! Lie algebras by structure constants, with series, centralizers,
//! normalizers, subalgebras and quotients.
//!
//! Convention: `ad(x)` is the matrix of `y -> [y, x]` acting on row vectors
//! from the right, so `v * ad(x) = [v, x]` and `L (ad C)^k` reads literally.

mod algebra;
mod json;
mod ops;
mod series;

pub use algebra::{BracketEntry, LieAlgebra};
pub use ops::{Induced, Quotient};
pub use series::{SeriesChain, SeriesKind};

use crate::field::{FiniteField, Rationals};

/// An algebra whose field was chosen at runtime.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyAlgebra {
    Rational(LieAlgebra<Rationals>),
    Finite(LieAlgebra<FiniteField>),
}

/// Run a generic expression on whichever algebra is inside an [`AnyAlgebra`].
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, |$l:ident| $body:expr) => {
        match $any {
            $crate::lie::AnyAlgebra::Rational($l) => $body,
            $crate::lie::AnyAlgebra::Finite($l) => $body,
        }
    };
}

impl AnyAlgebra {
    pub fn dim(&self) -> usize {
        with_algebra!(self, |l| l.dim())
    }

    pub fn field_spec(&self) -> crate::field::FieldSpec {
        use crate::field::Field;
        with_algebra!(self, |l| l.field().spec())
    }
}

impl From<LieAlgebra<Rationals>> for AnyAlgebra {
    fn from(l: LieAlgebra<Rationals>) -> Self {
        AnyAlgebra::Rational(l)
    }
}

impl From<LieAlgebra<FiniteField>> for AnyAlgebra {
    fn from(l: LieAlgebra<FiniteField>) -> Self {
        AnyAlgebra::Finite(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::field::Field;
    use crate::generators;
    use crate::linalg::Subspace;

    fn q() -> Rationals {
        Rationals
    }

    fn vecq(xs: &[i64]) -> Vec<num_rational::BigRational> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn construction_validates() {
        assert!(generators::two_dim_nonabelian(q()).is_ok());
        assert!(generators::heisenberg(q()).is_ok());
        // [b1,b2]=b3, [b1,b3]=b1, [b2,b3]=0
        let bad = LieAlgebra::new(
            q(),
            3,
            vec![(0, 1, vecq(&[0, 0, 1])), (0, 2, vecq(&[1, 0, 0]))],
        );
        assert!(matches!(bad, Err(Error::JacobiViolation { i: 0, j: 1, k: 2, .. })));
        let diag = LieAlgebra::new(q(), 2, vec![(1, 1, vecq(&[1, 0]))]);
        assert_eq!(diag.unwrap_err(), Error::AlternatingViolation(1, 1));
        let clash = LieAlgebra::new(q(), 2, vec![(0, 1, vecq(&[1, 0])), (1, 0, vecq(&[1, 0]))]);
        assert_eq!(clash.unwrap_err(), Error::AlternatingViolation(0, 1));
        let consistent = LieAlgebra::new(q(), 2, vec![(0, 1, vecq(&[1, 0])), (1, 0, vecq(&[-1, 0]))]);
        assert!(consistent.is_ok());
    }

    #[test]
    fn ad_is_right_action() {
        let l = generators::two_dim_nonabelian(q()).unwrap();
        let ad = l.ad(&l.unit(1));
        // b1 -> [b1, b2] = b1, b2 -> 0
        assert_eq!(ad.row(0), vecq(&[1, 0]).as_slice());
        assert_eq!(ad.row(1), vecq(&[0, 0]).as_slice());
        let h = generators::heisenberg(q()).unwrap();
        let adx = h.ad(&h.unit(0));
        assert_eq!(adx.row(1), vecq(&[0, 0, -1]).as_slice());
        assert!(h.ad(&h.zero_vector()).is_zero(&q()));
    }

    #[test]
    fn series_examples() {
        let ab = LieAlgebra::new(q(), 2, vec![]).unwrap();
        assert_eq!(ab.derived_series().dims(), vec![2, 0]);
        assert_eq!(ab.derived_length(), Some(1));
        let two = generators::two_dim_nonabelian(q()).unwrap();
        assert_eq!(two.derived_series().dims(), vec![2, 1, 0]);
        assert_eq!(two.nilpotent_residual(&two.full()), two.span(vec![two.unit(0)]));
        let h = generators::heisenberg(q()).unwrap();
        assert_eq!(h.derived_algebra(), h.span(vec![h.unit(2)]));
        assert!(h.is_nilpotent());
        assert!(h.nilpotent_residual(&h.full()).is_zero());
    }

    #[test]
    fn centralizers() {
        let h = generators::heisenberg(q()).unwrap();
        assert_eq!(h.center(), h.span(vec![h.unit(2)]));
        let two = generators::two_dim_nonabelian(q()).unwrap();
        assert!(two.center().is_zero());
        // normalizer of span{b2} in the 2-dim algebra is itself
        let b2 = two.span(vec![two.unit(1)]);
        assert_eq!(two.normalizer(&b2), b2);
        assert_eq!(h.normalizer(&h.span(vec![h.unit(0)])), h.span(vec![h.unit(0), h.unit(2)]));
    }

    #[test]
    fn quotient_and_induced() {
        let h = generators::heisenberg(q()).unwrap();
        let z = h.span(vec![h.unit(2)]);
        let quo = h.quotient(&z).unwrap();
        assert_eq!(quo.algebra.dim(), 2);
        assert!(quo.algebra.is_abelian());
        let ind = h.induced(&z).unwrap();
        assert_eq!(ind.algebra.dim(), 1);
        assert!(h.induced(&h.span(vec![h.unit(0), h.unit(1)])).is_err());
        assert!(h.quotient(&h.span(vec![h.unit(0)])).is_err());
    }

    #[test]
    fn direct_sums() {
        let h = generators::heisenberg(q()).unwrap();
        let one = LieAlgebra::new(q(), 1, vec![]).unwrap();
        let s = h.direct_sum(&one).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.center().dim(), 2);
        let ab = LieAlgebra::new(q(), 2, vec![]).unwrap();
        assert!(ab.direct_sum(&one).unwrap().is_abelian());
        let g = generators::heisenberg(crate::field::FiniteField::prime(2).unwrap()).unwrap();
        let _ = g;
    }

    #[test]
    fn json_round_trip() {
        let l = generators::heisenberg(q()).unwrap();
        let text = l.to_json().to_string();
        let back = AnyAlgebra::from_json_str(&text).unwrap();
        assert_eq!(back, AnyAlgebra::Rational(l));
        let src = r#"{"field":{"type":"GF","p":3},"dim":2,"brackets":[{"i":1,"j":0,"coeffs":{"0":2}}]}"#;
        let AnyAlgebra::Finite(g) = AnyAlgebra::from_json_str(src).unwrap() else { panic!() };
        assert_eq!(g.structure_constant(0, 1), &[1, 0]);
        assert!(matches!(AnyAlgebra::from_json_str("{"), Err(Error::Parse(_))));
        let sub: Subspace<u32> = g.span(vec![g.unit(0)]);
        assert_eq!(sub.encode(g.field()), serde_json::json!([[1, 0]]));
    }
}
