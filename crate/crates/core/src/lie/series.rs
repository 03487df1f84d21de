use serde::Serialize;

use super::LieAlgebra;
use crate::field::Field;
use crate::linalg::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    LowerNilpotent,
}

/// A descending chain of subspaces, listed until it stabilizes. The last
/// term is repeated by the next step of the recursion.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesChain<E> {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace<E>>,
}

impl<E: Clone> SeriesChain<E> {
    pub fn terminal(&self) -> &Subspace<E> {
        self.terms.last().expect("series always starts with a term")
    }

    pub fn reaches_zero(&self) -> bool {
        self.terminal().is_zero()
    }

    /// Number of steps to reach zero (derived length, nilpotency class), or
    /// `None` if the series stabilizes above zero.
    pub fn length(&self) -> Option<usize> {
        self.reaches_zero().then(|| self.terms.len() - 1)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

fn iterate<E: Clone + PartialEq>(
    kind: SeriesKind,
    start: Subspace<E>,
    mut step: impl FnMut(&Subspace<E>) -> Subspace<E>,
) -> SeriesChain<E> {
    let mut terms = vec![start];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = step(last);
        if next == *last {
            break;
        }
        terms.push(next);
    }
    SeriesChain { kind, terms }
}

impl<F: Field> LieAlgebra<F> {
    pub fn derived_series(&self) -> SeriesChain<F::Elem> {
        self.derived_series_of(&self.full())
    }

    /// Derived series of the subalgebra `u`.
    pub fn derived_series_of(&self, u: &Subspace<F::Elem>) -> SeriesChain<F::Elem> {
        iterate(SeriesKind::Derived, u.clone(), |t| self.bracket_spaces(t, t))
    }

    pub fn lower_central_series(&self) -> SeriesChain<F::Elem> {
        self.lower_central_series_of(&self.full())
    }

    /// `U, [U,U], [[U,U],U], ...` for a subalgebra `U`.
    pub fn lower_central_series_of(&self, u: &Subspace<F::Elem>) -> SeriesChain<F::Elem> {
        iterate(SeriesKind::LowerCentral, u.clone(), |t| self.bracket_spaces(t, u))
    }

    /// The smallest ideal of `U` with nilpotent quotient: the stable term of
    /// its lower central series.
    pub fn nilpotent_residual(&self, u: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        self.lower_central_series_of(u).terminal().clone()
    }

    /// `N_0 = L`, `N_{i+1}` the nilpotent residual of `N_i`.
    pub fn lower_nilpotent_series(&self) -> SeriesChain<F::Elem> {
        iterate(SeriesKind::LowerNilpotent, self.full(), |t| self.nilpotent_residual(t))
    }

    pub fn derived_algebra(&self) -> Subspace<F::Elem> {
        let full = self.full();
        self.bracket_spaces(&full, &full)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().reaches_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().reaches_zero()
    }

    /// Derived length of a solvable algebra (0 for the zero algebra).
    pub fn derived_length(&self) -> Option<usize> {
        self.derived_series().length()
    }

    pub fn is_nilpotent_space(&self, u: &Subspace<F::Elem>) -> bool {
        self.lower_central_series_of(u).reaches_zero()
    }

    pub fn is_solvable_space(&self, u: &Subspace<F::Elem>) -> bool {
        self.derived_series_of(u).reaches_zero()
    }

    /// `L^2` nilpotent.
    pub fn is_strongly_solvable(&self) -> bool {
        self.is_nilpotent_space(&self.derived_algebra())
    }

    /// `L^2` abelian.
    pub fn is_metabelian(&self) -> bool {
        self.is_abelian_space(&self.derived_algebra())
    }
}
