//! Exhaustive searches over small finite fields.
//!
//! Everything here is brute force on purpose: these functions are the
//! reference answers that the structural algorithms are tested against.
//! Subspaces are visited once each, by RREF shape, in a fixed order.

use serde::Serialize;

use crate::config::{Config, Deadline, EnumBudget};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::{self, is_zero_vec, Subspace};

/// Number of `k`-dimensional subspaces of `GF(q)^n`.
pub fn gaussian_binomial(q: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

/// Number of subspaces of `GF(q)^n`, all dimensions.
pub fn subspace_count(q: u64, n: usize) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(q, n, k)))
}

/// Number of one-dimensional subspaces of `GF(q)^d`.
pub fn projective_count(q: u64, d: usize) -> u128 {
    if d == 0 {
        return 0;
    }
    ((q as u128).saturating_pow(d as u32) - 1) / (q as u128 - 1)
}

fn elements_of<F: Field>(f: &F) -> Result<Vec<F::Elem>> {
    f.elements().ok_or(Error::InfiniteField)
}

/// The `idx`-th normalized vector of length `d` (first nonzero entry 1).
/// Ordered by position of the leading 1, then lexicographically in the
/// field's element order.
pub(crate) fn projective_point<F: Field>(f: &F, elems: &[F::Elem], d: usize, mut idx: u128) -> Vec<F::Elem> {
    let q = elems.len() as u128;
    let mut v = vec![f.zero(); d];
    for lead in 0..d {
        let block = q.pow((d - lead - 1) as u32);
        if idx < block {
            v[lead] = f.one();
            for slot in v[lead + 1..].iter_mut().rev() {
                *slot = elems[(idx % q) as usize].clone();
                idx /= q;
            }
            return v;
        }
        idx -= block;
    }
    panic!("projective index out of range");
}

/// The `idx`-th vector of `GF(q)^d` in mixed-radix order.
pub(crate) fn nth_vector<E: Clone>(elems: &[E], d: usize, mut idx: u128) -> Vec<E> {
    let q = elems.len() as u128;
    let mut v = Vec::with_capacity(d);
    for _ in 0..d {
        v.push(elems[(idx % q) as usize].clone());
        idx /= q;
    }
    v.reverse();
    v
}

/// Pivot sets of size `k` in lexicographic order.
fn pivot_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn check_subspace_budget(q: u64, n: usize, budget: &EnumBudget) -> Result<()> {
    let count = subspace_count(q, n);
    if count > budget.max_subspaces as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{count} subspaces of a {n}-dimensional space over a field of order {q} exceed the limit of {}",
            budget.max_subspaces
        )));
    }
    Ok(())
}

/// Every subspace of `F^n` accepted by `keep`, ordered by dimension, then
/// pivot set, then free entries.
pub fn subspaces_where<F, P>(f: &F, n: usize, cfg: &Config, keep: P) -> Result<Vec<Subspace<F::Elem>>>
where
    F: Field,
    P: Fn(&Subspace<F::Elem>) -> bool + Sync + Send,
{
    let elems = elements_of(f)?;
    check_subspace_budget(elems.len() as u64, n, &cfg.budget)?;
    let deadline = Deadline::start(&cfg.budget);
    let shapes: Vec<Vec<usize>> = (0..=n).flat_map(|k| pivot_sets(n, k)).collect();
    let per_shape = cfg.exec.map(&shapes, |pivots| -> Result<Vec<Subspace<F::Elem>>> {
        deadline.check("subspace enumeration")?;
        // free slots: (row, column) right of the row's pivot, not a pivot column
        let mut free = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let total = (elems.len() as u128).pow(free.len() as u32);
        let mut out = Vec::new();
        for idx in 0..total {
            if idx & 0xfff == 0xfff {
                deadline.check("subspace enumeration")?;
            }
            let vals = nth_vector(&elems, free.len(), idx);
            let mut rows = vec![vec![f.zero(); n]; pivots.len()];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = f.one();
            }
            for (&(r, c), v) in free.iter().zip(vals) {
                rows[r][c] = v;
            }
            let s = Subspace::from_rref_unchecked(n, rows, pivots.clone());
            if keep(&s) {
                out.push(s);
            }
        }
        Ok(out)
    });
    let mut all = Vec::new();
    for chunk in per_shape {
        all.extend(chunk?);
    }
    Ok(all)
}

pub fn subalgebras<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Vec<Subspace<F::Elem>>> {
    subspaces_where(l.field(), l.dim(), cfg, |s| l.is_subalgebra(s))
}

pub fn ideals<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Vec<Subspace<F::Elem>>> {
    subspaces_where(l.field(), l.dim(), cfg, |s| l.is_ideal(s))
}

pub fn nilpotent_subalgebras<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Vec<Subspace<F::Elem>>> {
    subspaces_where(l.field(), l.dim(), cfg, |s| l.is_subalgebra(s) && l.is_nilpotent_space(s))
}

/// Members of `family` not strictly contained in another member.
fn maximal_members<E: Clone + PartialEq, F: Field<Elem = E>>(f: &F, family: &[Subspace<E>]) -> Vec<Subspace<E>> {
    family
        .iter()
        .filter(|m| !family.iter().any(|s| s.dim() > m.dim() && s.contains_space(f, m)))
        .cloned()
        .collect()
}

/// Proper subalgebras not contained in a larger proper subalgebra.
pub fn maximal_subalgebras<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Vec<Subspace<F::Elem>>> {
    let n = l.dim();
    let proper: Vec<_> = subalgebras(l, cfg)?.into_iter().filter(|s| s.dim() < n).collect();
    Ok(maximal_members(l.field(), &proper))
}

pub fn maximal_nilpotent_subalgebras<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Vec<Subspace<F::Elem>>> {
    Ok(maximal_members(l.field(), &nilpotent_subalgebras(l, cfg)?))
}

/// Largest ideal inside every maximal subalgebra.
pub fn frattini<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Subspace<F::Elem>> {
    if l.dim() <= 1 {
        return Ok(l.zero_space());
    }
    let maxes = maximal_subalgebras(l, cfg)?;
    let mut meet = l.full();
    for m in &maxes {
        meet = l.intersect(&meet, m);
    }
    Ok(l.core(&meet))
}

/// Frattini ideal of the subalgebra `b`, as a subspace of `L`.
pub fn frattini_of<F: Field>(l: &LieAlgebra<F>, b: &Subspace<F::Elem>, cfg: &Config) -> Result<Subspace<F::Elem>> {
    let ind = l.induced(b)?;
    Ok(ind.embed_space(&frattini(&ind.algebra, cfg)?))
}

/// Sum of all nilpotent ideals.
pub fn nilradical<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Subspace<F::Elem>> {
    let nil = subspaces_where(l.field(), l.dim(), cfg, |s| l.is_ideal(s) && l.is_nilpotent_space(s))?;
    Ok(nil.iter().fold(l.zero_space(), |acc, s| l.sum(&acc, s)))
}

/// Sorts into enumeration order: dimension, pivot set, then entries.
pub fn sort_canonical<E: Ord + Clone>(spaces: &mut [Subspace<E>]) {
    spaces.sort_by(|a, b| {
        (a.dim(), a.pivots(), a.basis()).cmp(&(b.dim(), b.pivots(), b.basis()))
    });
}

/// Nonzero ideals containing no smaller nonzero ideal.
pub fn minimal_ideals<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Vec<Subspace<F::Elem>>> {
    let ids: Vec<_> = ideals(l, cfg)?.into_iter().filter(|s| !s.is_zero()).collect();
    Ok(ids
        .iter()
        .filter(|i| !ids.iter().any(|j| j.dim() < i.dim() && i.contains_space(l.field(), j)))
        .cloned()
        .collect())
}

/// True iff every subalgebra has trivial Frattini ideal.
pub fn is_elementary<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<bool> {
    for b in subalgebras(l, cfg)? {
        if b.dim() > 1 && !frattini_of(l, &b, cfg)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How the pair oracle walks candidate pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairStrategy {
    /// Look for `x, y` with `z = [x,y] != 0` commuting with both; such a
    /// triple spans a Heisenberg subalgebra, and every nilpotent
    /// non-abelian subalgebra contains one.
    #[default]
    Heisenberg,
    /// Close `{x, y}` under brackets and test the result directly.
    Closure,
}

/// A pair generating a nilpotent non-abelian subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<E> {
    pub x: Vec<E>,
    pub y: Vec<E>,
}

/// Re-checks a witness from scratch.
pub fn replay_witness<F: Field>(l: &LieAlgebra<F>, w: &Witness<F::Elem>) -> bool {
    let u = l.generated_subalgebra(&[w.x.clone(), w.y.clone()]);
    !is_zero_vec(l.field(), &l.bracket(&w.x, &w.y)) && l.is_nilpotent_space(&u)
}

/// Candidate `y` directions for a given `x`: a complement of `x` in the
/// space where a witness partner must live.
pub(crate) fn partner_space<F: Field>(l: &LieAlgebra<F>, x: &[F::Elem], strategy: PairStrategy) -> Subspace<F::Elem> {
    let f = l.field();
    let ad = l.ad(x);
    let host = match strategy {
        // [y,x] must commute with x
        PairStrategy::Heisenberg => linalg::left_kernel(f, &ad.pow(f, 2)),
        // ad x is nilpotent on a nilpotent subalgebra containing x
        PairStrategy::Closure => linalg::left_kernel(f, &ad.pow(f, l.dim() as u32)),
    };
    linalg::complement(f, &l.span(vec![x.to_vec()]), &host).expect("x lies in its own kernel")
}

pub(crate) fn pair_ok<F: Field>(l: &LieAlgebra<F>, x: &[F::Elem], y: &[F::Elem], strategy: PairStrategy) -> bool {
    let f = l.field();
    let z = l.bracket(x, y);
    if is_zero_vec(f, &z) {
        return false;
    }
    match strategy {
        PairStrategy::Heisenberg => is_zero_vec(f, &l.bracket(x, &z)) && is_zero_vec(f, &l.bracket(y, &z)),
        PairStrategy::Closure => l.is_nilpotent_space(&l.generated_subalgebra(&[x.to_vec(), y.to_vec()])),
    }
}

/// Number of pairs the pair oracle would visit.
pub fn pair_count<F: Field>(l: &LieAlgebra<F>, strategy: PairStrategy) -> Result<u128> {
    let f = l.field();
    let elems = elements_of(f)?;
    let q = elems.len() as u64;
    let nx = projective_count(q, l.dim());
    let mut total = 0u128;
    for ix in 0..nx {
        let x = projective_point(f, &elems, l.dim(), ix);
        total = total.saturating_add(projective_count(q, partner_space(l, &x, strategy).dim()));
    }
    Ok(total)
}

/// Exhaustive A-check by pairs: `Ok(None)` means the algebra is an
/// A-algebra, `Ok(Some(w))` returns the first witness in enumeration order.
pub fn pair_search<F: Field>(
    l: &LieAlgebra<F>,
    cfg: &Config,
    strategy: PairStrategy,
) -> Result<Option<Witness<F::Elem>>> {
    let f = l.field();
    let elems = elements_of(f)?;
    let q = elems.len() as u64;
    let n = l.dim();
    // Cheap bound first so hopeless inputs fail before any bracket work.
    let nx = projective_count(q, n);
    if nx > cfg.budget.max_pairs as u128 {
        return Err(pair_budget_error(nx, &cfg.budget));
    }
    let count = pair_count(l, strategy)?;
    if count > cfg.budget.max_pairs as u128 {
        return Err(pair_budget_error(count, &cfg.budget));
    }
    let deadline = Deadline::start(&cfg.budget);
    let hit = cfg.exec.find_first_range(nx as usize, |ix| {
        if let Err(e) = deadline.check("pair search") {
            return Some(Err(e));
        }
        let x = projective_point(f, &elems, n, ix as u128);
        let w = partner_space(l, &x, strategy);
        let ny = projective_count(q, w.dim());
        (0..ny).find_map(|iy| {
            let y = w.vector(f, &projective_point(f, &elems, w.dim(), iy));
            pair_ok(l, &x, &y, strategy).then(|| Ok(Witness { x: x.clone(), y }))
        })
    });
    hit.transpose()
}

fn pair_budget_error(count: u128, budget: &EnumBudget) -> Error {
    Error::BudgetExceeded(format!("{count} candidate pairs exceed the limit of {}", budget.max_pairs))
}

/// A-check by listing all nilpotent subalgebras; the witness is a
/// non-commuting basis pair of the first non-abelian one.
pub fn subalgebra_search<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Option<Witness<F::Elem>>> {
    let bad = subspaces_where(l.field(), l.dim(), cfg, |s| {
        l.is_subalgebra(s) && !l.is_abelian_space(s) && l.is_nilpotent_space(s)
    })?;
    Ok(bad.first().map(|u| witness_in(l, u).expect("u is nilpotent and non-abelian")))
}

/// A witness pair inside a nilpotent non-abelian subalgebra `u`, or `None`
/// if `u` is abelian or not nilpotent.
pub fn witness_in<F: Field>(l: &LieAlgebra<F>, u: &Subspace<F::Elem>) -> Option<Witness<F::Elem>> {
    let f = l.field();
    if l.is_abelian_space(u) || !l.is_nilpotent_space(u) {
        return None;
    }
    let b = u.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !is_zero_vec(f, &l.bracket(&b[i], &b[j])) {
                // the pair may generate less than u, so close it up again
                let w = Witness {
                    x: b[i].clone(),
                    y: b[j].clone(),
                };
                if replay_witness(l, &w) {
                    return Some(w);
                }
            }
        }
    }
    // The last nonzero term of the lower central series of u is central in u.
    let lcs = l.lower_central_series_of(u);
    let last = &lcs.terms[lcs.terms.len() - 2];
    let prev = &lcs.terms[lcs.terms.len() - 3];
    for x in prev.basis() {
        for y in b {
            let z = l.bracket(x, y);
            if !is_zero_vec(f, &z) && last.contains(f, &z) {
                return Some(Witness {
                    x: x.clone(),
                    y: y.clone(),
                });
            }
        }
    }
    unreachable!("a nilpotent non-abelian subalgebra always contains a Heisenberg triple")
}

/// One JSON array per line, one subspace per line.
pub fn inventory_json_lines<F: Field>(f: &F, spaces: &[Subspace<F::Elem>]) -> String {
    let mut out = String::new();
    for s in spaces {
        out.push_str(&s.encode(f).to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::generators;

    fn gf(p: u64) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        let cfg = Config::default();
        for (q, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)] {
            let f = if q == 4 { FiniteField::extension(2, 2).unwrap() } else { gf(q) };
            let all = subspaces_where(&f, n, &cfg, |_| true).unwrap();
            assert_eq!(all.len() as u128, subspace_count(q, n), "q={q} n={n}");
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
        }
        assert_eq!(subspace_count(2, 2), 5);
        assert_eq!(subspace_count(2, 5), 374);
        assert_eq!(subspace_count(3, 5), 2664);
    }

    #[test]
    fn projective_points_are_distinct_and_normalized() {
        let f = gf(3);
        let elems = f.elements().unwrap();
        let pts: Vec<_> = (0..projective_count(3, 3)).map(|i| projective_point(&f, &elems, 3, i)).collect();
        assert_eq!(pts.len(), 13);
        let mut s = pts.clone();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), 13);
        assert!(pts.iter().all(|v| v.iter().find(|a| **a != 0) == Some(&1)));
    }

    #[test]
    fn budget_is_loud() {
        let l = generators::abelian(gf(3), 8).unwrap();
        let mut cfg = Config::default();
        cfg.budget.max_subspaces = 1000;
        assert!(matches!(subalgebras(&l, &cfg), Err(Error::BudgetExceeded(_))));
        cfg.budget.max_pairs = 10;
        assert!(matches!(pair_search(&l, &cfg, PairStrategy::Heisenberg), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn small_inventories() {
        let cfg = Config::default();
        let ab = generators::abelian(gf(2), 2).unwrap();
        assert_eq!(subalgebras(&ab, &cfg).unwrap().len(), 5);
        assert!(frattini(&ab, &cfg).unwrap().is_zero());
        let h = generators::heisenberg(gf(2)).unwrap();
        assert_eq!(maximal_nilpotent_subalgebras(&h, &cfg).unwrap(), vec![h.full()]);
        assert_eq!(minimal_ideals(&h, &cfg).unwrap(), vec![h.span(vec![h.unit(2)])]);
        let two = generators::two_dim_nonabelian(gf(3)).unwrap();
        assert_eq!(nilradical(&two, &cfg).unwrap(), two.span(vec![two.unit(0)]));
        assert!(is_elementary(&two, &cfg).unwrap());
        // Heisenberg: Frattini ideal is the center
        assert_eq!(frattini(&h, &cfg).unwrap(), h.span(vec![h.unit(2)]));
    }

    #[test]
    fn pair_strategies_on_small_cases() {
        let cfg = Config::default();
        for strategy in [PairStrategy::Heisenberg, PairStrategy::Closure] {
            let h = generators::heisenberg(gf(3)).unwrap();
            let w = pair_search(&h, &cfg, strategy).unwrap().expect("Heisenberg is not A");
            assert!(replay_witness(&h, &w));
            let two = generators::two_dim_nonabelian(gf(3)).unwrap();
            assert_eq!(pair_search(&two, &cfg, strategy).unwrap(), None);
        }
        let h = generators::heisenberg(gf(2)).unwrap();
        assert!(replay_witness(&h, &subalgebra_search(&h, &cfg).unwrap().unwrap()));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let l = generators::cyclic_shift_algebra(gf(3)).unwrap();
        let par = Config::default();
        let seq = Config::default().sequential();
        assert_eq!(subalgebras(&l, &par).unwrap(), subalgebras(&l, &seq).unwrap());
        let h = generators::heisenberg(gf(3)).unwrap().direct_sum(&l).unwrap();
        assert_eq!(
            pair_search(&h, &par, PairStrategy::Heisenberg).unwrap(),
            pair_search(&h, &seq, PairStrategy::Heisenberg).unwrap()
        );
    }
}
