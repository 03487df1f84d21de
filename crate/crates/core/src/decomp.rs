//! Fitting decompositions, Cartan subalgebras and the splitting of a
//! solvable algebra over the terms of its derived series.
//!
//! Every construction re-checks its postconditions before returning, since
//! callers often use these routines to probe whether the input is an
//! A-algebra in the first place.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::{Config, Fault};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::{self, Matrix, Subspace};
use crate::oracle;

/// `L0 ∔ L1` relative to an element or a nilpotent subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct FittingPair<E> {
    pub l0: Subspace<E>,
    pub l1: Subspace<E>,
    pub relative_to: String,
}

/// Fitting decomposition of `L` under `ad x`: `L0` is the generalized
/// null space, `L1` the stable image.
pub fn fitting_single<F: Field>(l: &LieAlgebra<F>, x: &[F::Elem]) -> FittingPair<F::Elem> {
    let f = l.field();
    let m = l.ad(x).pow(f, l.dim() as u32);
    FittingPair {
        l0: linalg::left_kernel(f, &m),
        l1: l.span(m.into_rows()),
        relative_to: "element".into(),
    }
}

/// Fitting decomposition of the `ad C`-invariant subspace `v` relative to
/// the subalgebra `c`.
pub fn fitting_within<F: Field>(
    l: &LieAlgebra<F>,
    v: &Subspace<F::Elem>,
    c: &Subspace<F::Elem>,
) -> Result<FittingPair<F::Elem>> {
    let mut l1 = v.clone();
    loop {
        let next = l.bracket_spaces(&l1, c);
        if next == l1 {
            break;
        }
        l1 = next;
    }
    let gens = c.basis().to_vec();
    let mut l0 = l.zero_space();
    loop {
        let next = l.ad_preimage(v, &gens, &l0);
        if next == l0 {
            break;
        }
        l0 = next;
    }
    if !l.intersect(&l0, &l1).is_zero() || l0.dim() + l1.dim() != v.dim() {
        return Err(Error::NotNilpotentAction);
    }
    Ok(FittingPair {
        l0,
        l1,
        relative_to: format!("subalgebra of dimension {}", c.dim()),
    })
}

/// Fitting decomposition of `L` relative to a nilpotent subalgebra.
pub fn fitting_subalgebra<F: Field>(l: &LieAlgebra<F>, c: &Subspace<F::Elem>) -> Result<FittingPair<F::Elem>> {
    if !l.is_subalgebra(c) {
        return Err(Error::NotClosed("acting subspace is not a subalgebra".into()));
    }
    if !l.is_nilpotent_space(c) {
        return Err(Error::NotNilpotentAction);
    }
    fitting_within(l, &l.full(), c)
}

/// Nilpotent and equal to its own normalizer.
pub fn is_cartan<F: Field>(l: &LieAlgebra<F>, u: &Subspace<F::Elem>) -> bool {
    l.is_subalgebra(u) && l.is_nilpotent_space(u) && l.normalizer(u) == *u
}

/// Shrinks the subalgebra `k` by Fitting null components of its own
/// elements until it is nilpotent.
fn descend<F: Field>(l: &LieAlgebra<F>, mut k: Subspace<F::Elem>, rng: &mut ChaCha8Rng) -> Option<Subspace<F::Elem>> {
    let f = l.field();
    loop {
        if l.is_nilpotent_space(&k) {
            return Some(k);
        }
        let ind = l.induced(&k).ok()?;
        let sub = &ind.algebra;
        let d = sub.dim();
        let mut tries: Vec<Vec<F::Elem>> = (0..d).map(|i| sub.unit(i)).collect();
        for i in 0..d {
            for j in i + 1..d {
                tries.push(linalg::add_vec(f, &sub.unit(i), &sub.unit(j)));
            }
        }
        match f.elements() {
            Some(el) if (el.len() as u128).saturating_pow(d as u32) <= 4096 => {
                tries.extend((1..(el.len() as u128).pow(d as u32)).map(|i| oracle::nth_vector(&el, d, i)));
            }
            _ => tries.extend((0..32).map(|_| (0..d).map(|_| f.random(rng)).collect())),
        }
        let shrink = tries.iter().find_map(|y| {
            let l0 = fitting_single(sub, y).l0;
            (l0.dim() < d).then_some(l0)
        })?;
        k = ind.embed_space(&shrink);
    }
}

/// A nilpotent self-normalizing subalgebra of a solvable algebra.
///
/// Tries `L0(ad x)` for basis vectors, then for all (or, over large and
/// infinite fields, seeded random) elements, descending inside it until it
/// is nilpotent. Small finite fields fall back to exhaustive search.
pub fn cartan_subalgebra<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Subspace<F::Elem>> {
    if !l.is_solvable() {
        return Err(Error::NotSolvable);
    }
    if l.is_nilpotent() {
        return Ok(l.full());
    }
    let f = l.field();
    let n = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut candidates: Vec<Vec<F::Elem>> = (0..n).map(|i| l.unit(i)).collect();
    match f.elements() {
        Some(el) if oracle::projective_count(el.len() as u64, n) <= 20_000 => {
            let count = oracle::projective_count(el.len() as u64, n);
            candidates.extend((0..count).map(|i| oracle::projective_point(f, &el, n, i)));
        }
        _ => candidates.extend((0..32).map(|_| (0..n).map(|_| f.random(&mut rng)).collect())),
    }
    let seeds: Vec<u64> = (0..candidates.len()).map(|i| cfg.seed.wrapping_add(i as u64)).collect();
    let found = cfg.exec.find_first_range(candidates.len(), |i| {
        let mut local = ChaCha8Rng::seed_from_u64(seeds[i]);
        let k = descend(l, fitting_single(l, &candidates[i]).l0, &mut local)?;
        is_cartan(l, &k).then_some(k)
    });
    if let Some(k) = found {
        return Ok(k);
    }
    if f.is_finite() {
        if let Ok(nil) = oracle::nilpotent_subalgebras(l, cfg) {
            if let Some(k) = nil.into_iter().find(|u| is_cartan(l, u)) {
                return Ok(k);
            }
        }
    }
    Err(Error::FieldTooSmall {
        reason: "no nilpotent self-normalizing subalgebra found".into(),
        suggested_degree: Some(2),
    })
}

/// `S = T ∔ B` with `T` the last nonzero derived term of the subalgebra
/// `S` and `B` a subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Split<E> {
    pub ideal: Subspace<E>,
    pub complement: Subspace<E>,
}

/// Splits the solvable subalgebra `s` over its last nonzero derived term,
/// taking the complement as the Fitting null component of `s` relative to
/// a Cartan subalgebra of the previous term.
pub fn split_subalgebra<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F::Elem>, cfg: &Config) -> Result<Split<F::Elem>> {
    let series = l.derived_series_of(s);
    if !series.reaches_zero() {
        return Err(Error::NotSolvable);
    }
    let t = &series.terms;
    if t.len() <= 2 {
        return Ok(Split {
            ideal: s.clone(),
            complement: l.zero_space(),
        });
    }
    let ideal = t[t.len() - 2].clone();
    let prev = &t[t.len() - 3];
    let complement = if cfg.fault == Some(Fault::LinearComplement) {
        // any linear complement will do for the broken variant
        let f = l.field();
        let t0 = &ideal.basis()[0];
        let c = linalg::complement(f, &ideal, s)?;
        l.span(c.basis().iter().map(|b| linalg::add_vec(f, b, t0)).collect())
    } else {
        let ind = l.induced(prev)?;
        let cartan = ind.embed_space(&cartan_subalgebra(&ind.algebra, cfg)?);
        match fitting_within(l, s, &cartan) {
            Ok(fp) => fp.l0,
            Err(Error::NotNilpotentAction) => {
                return Err(Error::SplitFailed("Fitting decomposition relative to the Cartan subalgebra is not direct".into()))
            }
            Err(e) => return Err(e),
        }
    };
    if !l.is_subalgebra(&complement) {
        return Err(Error::SplitFailed("complement is not a subalgebra".into()));
    }
    if !l.intersect(&complement, &ideal).is_zero() || complement.dim() + ideal.dim() != s.dim() {
        return Err(Error::SplitFailed(format!(
            "complement of dimension {} does not meet the derived term of dimension {} trivially",
            complement.dim(),
            ideal.dim()
        )));
    }
    Ok(Split { ideal, complement })
}

pub fn split_over_terminal_derived<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Split<F::Elem>> {
    split_subalgebra(l, &l.full(), cfg)
}

/// `L = A_n ∔ … ∔ A_0` with abelian `A_i` and `L^(i) = A_n ∔ … ∔ A_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangularDecomposition<E> {
    /// `A_n` first, `A_0` last.
    pub parts: Vec<Subspace<E>>,
    /// `B_n, …, B_1`: `B_i` is the complement chosen when splitting off `A_i`.
    pub complements: Vec<Subspace<E>>,
    pub derived_length: usize,
}

impl<E: Clone> TriangularDecomposition<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> Value {
        json!({
            "A": self.parts.iter().map(|s| s.encode(f)).collect::<Vec<_>>(),
            "derived_length": self.derived_length,
            "verified": true,
        })
    }
}

pub fn triangular_decomposition<F: Field>(
    l: &LieAlgebra<F>,
    cfg: &Config,
) -> Result<TriangularDecomposition<F::Elem>> {
    let series = l.derived_series();
    let Some(len) = series.length() else {
        return Err(Error::NotSolvable);
    };
    if len == 0 {
        return Ok(TriangularDecomposition {
            parts: vec![],
            complements: vec![],
            derived_length: 0,
        });
    }
    let mut parts = Vec::new();
    let mut complements = Vec::new();
    let mut current = l.full();
    for _ in 1..len {
        let split = split_subalgebra(l, &current, cfg)?;
        parts.push(split.ideal);
        complements.push(split.complement.clone());
        current = split.complement;
    }
    parts.push(current);
    let td = TriangularDecomposition {
        parts,
        complements,
        derived_length: len,
    };
    check_triangular(l, &td)?;
    Ok(td)
}

/// Checks the defining properties against the derived series of `L`.
pub fn check_triangular<F: Field>(l: &LieAlgebra<F>, td: &TriangularDecomposition<F::Elem>) -> Result<()> {
    let terms = &l.derived_series().terms;
    let n = td.parts.len();
    if n != td.derived_length || terms.len() != n + 1 {
        return Err(Error::SplitFailed("number of parts differs from the derived length".into()));
    }
    for (k, a) in td.parts.iter().enumerate() {
        let i = n - 1 - k;
        if !l.is_subalgebra(a) || !l.is_abelian_space(a) {
            return Err(Error::SplitFailed(format!("A_{i} is not an abelian subalgebra")));
        }
    }
    for i in 0..n {
        let tail = &td.parts[..n - i];
        let sum = tail.iter().fold(l.zero_space(), |acc, a| l.sum(&acc, a));
        let dims: usize = tail.iter().map(Subspace::dim).sum();
        if sum != terms[i] || dims != terms[i].dim() {
            return Err(Error::SplitFailed(format!(
                "A_{} + … + A_{i} is not a direct decomposition of the derived term L^({i})",
                n - 1
            )));
        }
    }
    Ok(())
}

/// `[K ∩ A_n, …, K ∩ A_0]`, checked to add up to `K` directly.
pub fn ideal_decomposition<F: Field>(
    l: &LieAlgebra<F>,
    k: &Subspace<F::Elem>,
    td: &TriangularDecomposition<F::Elem>,
) -> Result<Vec<Subspace<F::Elem>>> {
    if !l.is_ideal(k) {
        return Err(Error::NotClosed("subspace is not an ideal".into()));
    }
    let pieces: Vec<_> = td.parts.iter().map(|a| l.intersect(k, a)).collect();
    let total: usize = pieces.iter().map(Subspace::dim).sum();
    if total != k.dim() {
        return Err(Error::DecompositionMismatch(format!(
            "intersections with the parts have total dimension {total}, the ideal has dimension {}",
            k.dim()
        )));
    }
    Ok(pieces)
}

/// A complement of the abelian ideal `s` that is a subalgebra, if any.
///
/// Writes the complement as `{x + δx : x ∈ C0}` for a fixed linear
/// complement `C0` and solves the closure condition, which is linear in
/// `δ : C0 → S`.
pub fn subalgebra_complement<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F::Elem>) -> Result<Option<Subspace<F::Elem>>> {
    complement_solve(l, s, false)
}

/// An abelian subalgebra complementing the abelian ideal `s`, if any. The
/// abelian condition is also linear in `δ` because `s` is abelian.
pub fn abelian_complement<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F::Elem>) -> Result<Option<Subspace<F::Elem>>> {
    complement_solve(l, s, true)
}

fn complement_solve<F: Field>(
    l: &LieAlgebra<F>,
    s: &Subspace<F::Elem>,
    abelian: bool,
) -> Result<Option<Subspace<F::Elem>>> {
    if !l.is_ideal(s) || !l.is_abelian_space(s) {
        return Err(Error::NotClosed("expected an abelian ideal".into()));
    }
    let f = l.field();
    let n = l.dim();
    let c0 = linalg::complement(f, s, &l.full())?;
    let cb = c0.basis();
    let sb = s.basis();
    let (m, k) = (cb.len(), sb.len());
    if m == 0 {
        return Ok(Some(c0));
    }
    if k == 0 {
        return Ok((!abelian || l.is_abelian_space(&c0)).then_some(c0));
    }
    // coordinates relative to the stacked basis [C0 ; S]
    let stacked = c0.matrix().stack(&s.matrix())?;
    let inv = linalg::inverse(f, &stacked)?;
    let split = |v: &[F::Elem]| {
        let c = inv.apply(f, v);
        (c[..m].to_vec(), c[m..].to_vec())
    };
    let bracket_cs: Vec<Vec<Vec<F::Elem>>> = cb
        .iter()
        .map(|c| sb.iter().map(|t| split(&l.bracket(c, t)).1).collect())
        .collect();
    let unknown = |a: usize, t: usize| a * k + t;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let (gamma, sigma) = split(&l.bracket(&cb[a], &cb[b]));
            if abelian && gamma.iter().any(|g| !f.is_zero(g)) {
                return Ok(None);
            }
            // σ + [c_a, δc_b] + [δc_a, c_b] − Σ_e γ_e δc_e = 0
            for r in 0..k {
                let mut row = vec![f.zero(); m * k];
                for t in 0..k {
                    let u = unknown(b, t);
                    row[u] = f.add(&row[u], &bracket_cs[a][t][r]);
                    let u = unknown(a, t);
                    row[u] = f.sub(&row[u], &bracket_cs[b][t][r]);
                }
                if !abelian {
                    for (e, g) in gamma.iter().enumerate() {
                        let u = unknown(e, r);
                        row[u] = f.sub(&row[u], g);
                    }
                }
                rows.push(row);
                rhs.push(f.neg(&sigma[r]));
            }
        }
    }
    if rows.is_empty() {
        return Ok(Some(c0));
    }
    let sys = Matrix::from_rows(m * k, rows)?;
    let delta = match linalg::solve(f, &sys, &rhs) {
        Ok(d) => d,
        Err(Error::NoSolution) => return Ok(None),
        Err(e) => return Err(e),
    };
    let gens = (0..m)
        .map(|a| {
            let mut v = cb[a].clone();
            for t in 0..k {
                linalg::axpy(f, &mut v, &delta[unknown(a, t)], &sb[t]);
            }
            v
        })
        .collect();
    let b = Subspace::span(f, n, gens);
    debug_assert!(l.is_subalgebra(&b) && (!abelian || l.is_abelian_space(&b)));
    Ok(Some(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};
    use crate::generators;

    fn gf(p: u64) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    #[test]
    fn fitting_of_single_elements() {
        let f = gf(5);
        let l = generators::diagonal_action_algebra(f.clone(), &[vec![0], vec![2]]).unwrap();
        let b = l.unit(2);
        let fp = fitting_single(&l, &b);
        assert_eq!(fp.l1, l.span(vec![l.unit(1)]));
        assert_eq!(fp.l0, l.span(vec![l.unit(0), l.unit(2)]));
        let h = generators::heisenberg(f).unwrap();
        let fp = fitting_single(&h, &h.unit(0));
        assert!(fp.l0.is_full() && fp.l1.is_zero());
    }

    #[test]
    fn fitting_relative_to_subalgebras() {
        let l = generators::cyclic_shift_algebra(gf(3)).unwrap();
        let fp = fitting_subalgebra(&l, &l.zero_space()).unwrap();
        assert!(fp.l0.is_full() && fp.l1.is_zero());
        // f together with x_1
        let c = l.span(vec![l.unit(1), l.unit(2)]);
        let fp = fitting_subalgebra(&l, &c).unwrap();
        assert_eq!(fp.l0.dim() + fp.l1.dim(), l.dim());
        let e = l.span(vec![l.unit(0), l.unit(1)]);
        assert!(matches!(fitting_subalgebra(&l, &e), Err(Error::NotNilpotentAction)));
    }

    #[test]
    fn cartan_examples() {
        let cfg = Config::default();
        let two = generators::two_dim_nonabelian(Rationals).unwrap();
        assert_eq!(cartan_subalgebra(&two, &cfg).unwrap(), two.span(vec![two.unit(1)]));
        let h = generators::heisenberg(Rationals).unwrap();
        assert!(cartan_subalgebra(&h, &cfg).unwrap().is_full());
        for p in [2, 3, 5] {
            let l = generators::cyclic_shift_algebra(gf(p)).unwrap();
            let c = cartan_subalgebra(&l, &cfg).unwrap();
            assert!(is_cartan(&l, &c));
            assert_eq!(c.dim(), 2);
        }
    }

    #[test]
    fn splits_and_triangular_decompositions() {
        let cfg = Config::default();
        let two = generators::two_dim_nonabelian(gf(3)).unwrap();
        let s = split_over_terminal_derived(&two, &cfg).unwrap();
        assert_eq!(s.ideal, two.span(vec![two.unit(0)]));
        assert_eq!(s.complement, two.span(vec![two.unit(1)]));
        let ab = generators::abelian(gf(2), 3).unwrap();
        let td = triangular_decomposition(&ab, &cfg).unwrap();
        assert_eq!(td.parts, vec![ab.full()]);
        for p in [2, 3] {
            let l = generators::cyclic_shift_algebra(gf(p)).unwrap();
            let td = triangular_decomposition(&l, &cfg).unwrap();
            let dims: Vec<_> = td.parts.iter().map(Subspace::dim).collect();
            assert_eq!(dims, vec![p as usize, 1, 1]);
            let d1 = l.derived_algebra();
            let pieces = ideal_decomposition(&l, &d1, &td).unwrap();
            assert_eq!(pieces[0].dim(), p as usize);
            assert_eq!(pieces[1], td.parts[1]);
            assert!(pieces[2].is_zero());
        }
        let h = generators::heisenberg(gf(2)).unwrap();
        assert!(matches!(triangular_decomposition(&h, &cfg), Err(Error::SplitFailed(_))));
    }

    #[test]
    fn linear_complement_fault_is_caught() {
        let mut cfg = Config::default();
        cfg.fault = Some(Fault::LinearComplement);
        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        assert!(matches!(triangular_decomposition(&l, &cfg), Err(Error::SplitFailed(_))));
    }

    #[test]
    fn subalgebra_complements_of_abelian_ideals() {
        let two = generators::two_dim_nonabelian(gf(3)).unwrap();
        let b = subalgebra_complement(&two, &two.span(vec![two.unit(0)])).unwrap().unwrap();
        assert!(two.is_subalgebra(&b) && b.dim() == 1);
        // the center of the Heisenberg algebra has no subalgebra complement
        let h = generators::heisenberg(gf(3)).unwrap();
        assert_eq!(subalgebra_complement(&h, &h.center()).unwrap(), None);
        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        let fp = l.span(vec![l.unit(2), l.unit(3)]);
        let b = subalgebra_complement(&l, &fp).unwrap().unwrap();
        assert!(l.is_subalgebra(&b));
    }
}
