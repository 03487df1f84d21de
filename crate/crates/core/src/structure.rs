//! Nilradical, center, minimal ideals, socle, monolith, Frattini ideal and
//! the φ-free test, plus a report that collects them with method tags.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Config;
use crate::decomp;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::{self, Matrix, Subspace};
use crate::oracle;

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    /// Sum of the centers of the derived terms.
    ASeries,
    /// Intersection of the centralizers of the chief factors.
    ChiefSeries,
    /// Trace-form radical of the associative envelope of `ad L`.
    Traceform,
    /// Minimal elements among ideals generated by single vectors, all of
    /// them enumerated.
    GeneratedIdeals,
    /// Repeatedly shrink a generated ideal; complete only over finite fields.
    Chop,
    Direct,
    /// `L^2` inside the abelian socle.
    DerivedInSocle,
    /// Monolith equals nilradical.
    MonolithIsNilradical,
    /// Nilradical equals abelian socle and the algebra splits over it.
    SocleSplitting,
}

/// Which family of algorithms a caller wants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    #[default]
    Auto,
    Oracle,
    Structural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NilradicalMethod {
    Oracle,
    ASeries,
    ChiefSeries,
    Traceform,
    Auto,
}

/// Largest nilpotent ideal.
pub fn nilradical<F: Field>(
    l: &LieAlgebra<F>,
    method: NilradicalMethod,
    cfg: &Config,
) -> Result<(Subspace<F::Elem>, Method)> {
    match method {
        NilradicalMethod::Oracle => Ok((oracle::nilradical(l, cfg)?, Method::Oracle)),
        NilradicalMethod::ASeries => Ok((nilradical_a_series(l)?, Method::ASeries)),
        NilradicalMethod::ChiefSeries => Ok((nilradical_chief_series(l, cfg)?, Method::ChiefSeries)),
        NilradicalMethod::Traceform => Ok((nilradical_traceform(l)?, Method::Traceform)),
        NilradicalMethod::Auto => {
            if l.is_nilpotent() {
                return Ok((l.full(), Method::Direct));
            }
            if l.field().is_finite() {
                match oracle::nilradical(l, cfg) {
                    Ok(n) => return Ok((n, Method::Oracle)),
                    Err(Error::BudgetExceeded(_)) => {}
                    Err(e) => return Err(e),
                }
                if l.is_solvable() {
                    return Ok((nilradical_chief_series(l, cfg)?, Method::ChiefSeries));
                }
            } else if l.is_solvable() {
                return Ok((nilradical_traceform(l)?, Method::Traceform));
            }
            Ok((nilradical_a_series(l)?, Method::ASeries))
        }
    }
}

/// `Σ Z(L^(i))`, valid for solvable A-algebras. The result is checked to be
/// an abelian ideal containing the last derived term and the center, with
/// centralizer inside itself; inputs failing the check are rejected.
pub fn nilradical_a_series<F: Field>(l: &LieAlgebra<F>) -> Result<Subspace<F::Elem>> {
    let series = l.derived_series();
    if !series.reaches_zero() {
        return Err(Error::MethodInapplicable("derived-series nilradical needs a solvable algebra".into()));
    }
    let mut n = l.zero_space();
    for t in &series.terms {
        let z = l.intersect(t, &l.centralizer(t));
        n = l.sum(&n, &z);
    }
    let terms = &series.terms;
    let last = if terms.len() >= 2 { &terms[terms.len() - 2] } else { &terms[0] };
    let ok = l.is_ideal(&n)
        && l.is_abelian_space(&n)
        && n.contains_space(l.field(), last)
        && n.contains_space(l.field(), &l.center())
        && n.contains_space(l.field(), &l.centralizer(&n));
    if !ok {
        return Err(Error::VerificationFailed(
            "sum of centers of derived terms is not a self-centralizing abelian ideal; the input is not a solvable A-algebra"
                .into(),
        ));
    }
    Ok(n)
}

/// Nilradical of a solvable algebra over a finite field as the intersection
/// of `C(H/K) = {x : [H, x] ⊆ K}` over the factors of a chief series.
/// Correct for every solvable algebra, A or not.
pub fn nilradical_chief_series<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Subspace<F::Elem>> {
    let f = l.field();
    if !f.is_finite() {
        return Err(Error::MethodInapplicable("the chief-series nilradical needs a finite field".into()));
    }
    if !l.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let mut nil = l.full();
    let mut lower = l.zero_space();
    while !lower.is_full() {
        let q = l.quotient(&lower)?;
        let upper = q.preimage(&one_minimal_ideal(&q.algebra, cfg)?);
        let columns: Vec<Vec<F::Elem>> = (0..l.dim())
            .map(|i| {
                let x = l.unit(i);
                upper.basis().iter().flat_map(|h| q.project(&l.bracket(h, &x))).collect()
            })
            .collect();
        let width = upper.dim() * q.algebra.dim();
        let centralizer = linalg::left_kernel(f, &Matrix::from_rows(width, columns)?);
        nil = l.intersect(&nil, &centralizer);
        lower = upper;
    }
    Ok(nil)
}

/// A minimal ideal of a nonzero solvable algebra over a finite field: start
/// at the last nonzero derived term and descend while some vector generates
/// a smaller ideal.
fn one_minimal_ideal<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Subspace<F::Elem>> {
    let f = l.field();
    let elems = f.elements().ok_or(Error::InfiniteField)?;
    let terms = l.derived_series().terms;
    let mut cur = terms.iter().rev().find(|t| !t.is_zero()).cloned().ok_or(Error::NotSolvable)?;
    'descend: loop {
        let count = oracle::projective_count(elems.len() as u64, cur.dim());
        if count > cfg.budget.max_pairs as u128 {
            return Err(Error::BudgetExceeded(format!(
                "{count} generating vectors exceed the limit of {}",
                cfg.budget.max_pairs
            )));
        }
        for i in 0..count {
            let v = cur.vector(f, &oracle::projective_point(f, &elems, cur.dim(), i));
            let sub = l.generated_ideal(&[v]);
            if sub.dim() < cur.dim() {
                cur = sub;
                continue 'descend;
            }
        }
        return Ok(cur);
    }
}

/// Flattened `n x n` matrix as a vector of length `n^2`.
fn flat<E: Clone>(m: &Matrix<E>) -> Vec<E> {
    m.rows().iter().flatten().cloned().collect()
}

fn unflat<E: Clone>(n: usize, v: &[E]) -> Matrix<E> {
    Matrix::from_rows(n, v.chunks(n).map(<[E]>::to_vec).collect()).expect("square")
}

/// `{x : ad x in Rad(A)}` where `A` is the associative algebra generated by
/// `ad L` and its radical is the kernel of the trace form. Characteristic
/// zero only.
pub fn nilradical_traceform<F: Field>(l: &LieAlgebra<F>) -> Result<Subspace<F::Elem>> {
    let f = l.field();
    if f.characteristic() != 0 {
        return Err(Error::MethodInapplicable("trace-form radical needs characteristic zero".into()));
    }
    if !l.is_solvable() {
        return Err(Error::MethodInapplicable("trace-form nilradical is implemented for solvable algebras".into()));
    }
    let n = l.dim();
    if n == 0 {
        return Ok(l.zero_space());
    }
    let ads: Vec<Matrix<F::Elem>> = (0..n).map(|i| l.ad(&l.unit(i))).collect();
    // associative envelope, closed under right multiplication by generators
    let mut env = Subspace::span(f, n * n, ads.iter().map(flat).collect());
    let mut frontier: Vec<Vec<F::Elem>> = env.basis().to_vec();
    while let Some(v) = frontier.pop() {
        let m = unflat(n, &v);
        for g in &ads {
            let p = flat(&linalg::matmul(f, &m, g));
            if !env.contains(f, &p) {
                env = env.extend(f, p.clone());
                frontier.push(p);
            }
        }
    }
    let basis: Vec<Matrix<F::Elem>> = env.basis().iter().map(|v| unflat(n, v)).collect();
    let d = basis.len();
    let gram = Matrix::from_rows(
        d,
        basis
            .iter()
            .map(|a| basis.iter().map(|b| linalg::matmul(f, a, b).trace(f)).collect())
            .collect(),
    )?;
    let rad_coeffs = linalg::kernel(f, &gram);
    let rad = Subspace::span(
        f,
        n * n,
        rad_coeffs.basis().iter().map(|c| env.vector(f, c)).collect(),
    );
    // x = Σ c_i b_i with Σ c_i ad(b_i) in rad
    let ann = linalg::kernel(f, &rad.matrix()).matrix().transpose();
    let ad_rows = Matrix::from_rows(n * n, ads.iter().map(flat).collect())?;
    let nil = linalg::left_kernel(f, &linalg::matmul(f, &ad_rows, &ann));
    if !l.is_ideal(&nil) || !l.is_nilpotent_space(&nil) {
        return Err(Error::VerificationFailed("trace-form radical is not a nilpotent ideal".into()));
    }
    Ok(nil)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalIdealMethod {
    Oracle,
    Chop,
    Auto,
}

/// All minimal ideals (complete over finite fields; over the rationals the
/// chop method may miss some when there are infinitely many).
pub fn minimal_ideals<F: Field>(
    l: &LieAlgebra<F>,
    method: MinimalIdealMethod,
    cfg: &Config,
) -> Result<(Vec<Subspace<F::Elem>>, Method)> {
    match method {
        MinimalIdealMethod::Oracle => Ok((oracle::minimal_ideals(l, cfg)?, Method::Oracle)),
        MinimalIdealMethod::Chop | MinimalIdealMethod::Auto => {
            if !l.is_solvable() {
                return Err(Error::MethodInapplicable("chop needs a solvable algebra".into()));
            }
            if l.field().is_finite() {
                Ok((minimal_ideals_generated(l, cfg)?, Method::GeneratedIdeals))
            } else {
                Ok((minimal_ideals_chop(l, cfg), Method::Chop))
            }
        }
    }
}

/// Where to look for generators of minimal ideals. Using the whole algebra
/// keeps the search exact without knowing the nilradical first.
fn socle_host<F: Field>(l: &LieAlgebra<F>) -> Subspace<F::Elem> {
    l.full()
}

fn keep_minimal<F: Field>(f: &F, mut found: Vec<Subspace<F::Elem>>) -> Vec<Subspace<F::Elem>> {
    oracle::sort_canonical(&mut found);
    found.dedup();
    found
        .iter()
        .filter(|i| !found.iter().any(|j| j.dim() < i.dim() && i.contains_space(f, j)))
        .cloned()
        .collect()
}

/// Minimal ideals as the minimal members of `{I(v) : v ≠ 0}`.
fn minimal_ideals_generated<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Vec<Subspace<F::Elem>>> {
    let f = l.field();
    let host = socle_host(l);
    let elems = f.elements().ok_or(Error::InfiniteField)?;
    let count = oracle::projective_count(elems.len() as u64, host.dim());
    if count > cfg.budget.max_pairs as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{count} generating vectors exceed the limit of {}",
            cfg.budget.max_pairs
        )));
    }
    let found = cfg.exec.map_range(count as usize, |i| {
        let v = host.vector(f, &oracle::projective_point(f, &elems, host.dim(), i as u128));
        l.generated_ideal(&[v])
    });
    Ok(keep_minimal(f, found))
}

/// Seeded chop: shrink generated ideals while some vector in them
/// generates something smaller.
fn minimal_ideals_chop<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Vec<Subspace<F::Elem>> {
    let f = l.field();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = l.dim();
    let mut starts: Vec<Vec<F::Elem>> = (0..n).map(|i| l.unit(i)).collect();
    starts.extend((0..n).map(|_| (0..n).map(|_| f.random(&mut rng)).collect::<Vec<_>>()));
    let mut found = Vec::new();
    for v in starts {
        if linalg::is_zero_vec(f, &v) {
            continue;
        }
        let mut cur = l.generated_ideal(&[v]);
        'shrink: loop {
            let mut probes: Vec<Vec<F::Elem>> = cur.basis().to_vec();
            probes.extend((0..4).map(|_| {
                let c: Vec<_> = (0..cur.dim()).map(|_| f.random(&mut rng)).collect();
                cur.vector(f, &c)
            }));
            for w in probes {
                if linalg::is_zero_vec(f, &w) {
                    continue;
                }
                let sub = l.generated_ideal(&[w]);
                if sub.dim() < cur.dim() {
                    cur = sub;
                    continue 'shrink;
                }
            }
            break;
        }
        found.push(cur);
    }
    keep_minimal(f, found)
}

/// Sum of the abelian minimal ideals.
pub fn abelian_socle<F: Field>(l: &LieAlgebra<F>, minimal: &[Subspace<F::Elem>]) -> Subspace<F::Elem> {
    minimal
        .iter()
        .filter(|i| l.is_abelian_space(i))
        .fold(l.zero_space(), |acc, i| l.sum(&acc, i))
}

/// The unique minimal ideal.
pub fn monolith<E: Clone>(minimal: &[Subspace<E>]) -> Result<Subspace<E>> {
    match minimal {
        [w] => Ok(w.clone()),
        _ => Err(Error::NotMonolithic(minimal.len())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrattiniMethod {
    Oracle,
    Structural,
}

/// Frattini ideal; only the exhaustive method computes it.
pub fn frattini<F: Field>(l: &LieAlgebra<F>, method: FrattiniMethod, cfg: &Config) -> Result<Subspace<F::Elem>> {
    match method {
        FrattiniMethod::Oracle => oracle::frattini(l, cfg),
        FrattiniMethod::Structural => Err(Error::MethodInapplicable(
            "the Frattini ideal itself needs the maximal subalgebras; use the φ-free test instead".into(),
        )),
    }
}

pub fn strongly_solvable<F: Field>(l: &LieAlgebra<F>) -> bool {
    l.is_strongly_solvable()
}

/// Decides `φ(L) = 0`.
///
/// `known_a` is an A-verdict obtained elsewhere; it unlocks the two cheap
/// routes that are only valid for A-algebras. Without it the structural
/// route uses the socle splitting test, valid for every solvable algebra.
pub fn is_phi_free<F: Field>(
    l: &LieAlgebra<F>,
    strategy: Strategy,
    known_a: Option<bool>,
    cfg: &Config,
) -> Result<(bool, Method)> {
    let oracle_route = || oracle::frattini(l, cfg).map(|p| (p.is_zero(), Method::Oracle));
    match strategy {
        Strategy::Oracle => oracle_route(),
        Strategy::Structural => phi_free_structural(l, known_a, cfg),
        Strategy::Auto => {
            if l.field().is_finite() {
                match oracle_route() {
                    Err(Error::BudgetExceeded(_)) => {}
                    other => return other,
                }
            }
            phi_free_structural(l, known_a, cfg)
        }
    }
}

fn phi_free_structural<F: Field>(l: &LieAlgebra<F>, known_a: Option<bool>, cfg: &Config) -> Result<(bool, Method)> {
    if !l.is_solvable() {
        return Err(Error::MethodInapplicable("structural φ-free test needs a solvable algebra".into()));
    }
    if l.dim() == 0 {
        return Ok((true, Method::Direct));
    }
    let (minimal, _) = minimal_ideals(l, MinimalIdealMethod::Chop, cfg)?;
    let asoc = abelian_socle(l, &minimal);
    if known_a == Some(true) {
        if l.is_strongly_solvable() {
            return Ok((asoc.contains_space(l.field(), &l.derived_algebra()), Method::DerivedInSocle));
        }
        if minimal.len() == 1 {
            let (n, _) = nilradical(l, NilradicalMethod::ASeries, cfg)?;
            return Ok((n == minimal[0], Method::MonolithIsNilradical));
        }
    }
    let n = match nilradical(l, NilradicalMethod::Auto, cfg) {
        Ok((n, _)) => n,
        Err(Error::VerificationFailed(_)) => oracle::nilradical(l, cfg)?,
        Err(e) => return Err(e),
    };
    if n != asoc {
        return Ok((false, Method::SocleSplitting));
    }
    Ok((decomp::subalgebra_complement(l, &asoc)?.is_some(), Method::SocleSplitting))
}

/// Either a value with the method that produced it, or why it is missing.
#[derive(Clone, Debug, PartialEq)]
pub enum Entry<T> {
    Computed { value: T, method: Method },
    Absent { reason: String },
}

impl<T> Entry<T> {
    pub fn from_result(r: Result<(T, Method)>) -> Self {
        match r {
            Ok((value, method)) => Entry::Computed { value, method },
            Err(e) => Entry::Absent { reason: e.to_string() },
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Entry::Computed { value, .. } => Some(value),
            Entry::Absent { .. } => None,
        }
    }

    fn to_json(&self, key: &str, enc: impl Fn(&T) -> Value) -> Value {
        match self {
            Entry::Computed { value, method } => json!({ key: enc(value), "method": method }),
            Entry::Absent { reason } => json!({ "absent": reason }),
        }
    }
}

/// Invariants of one algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureReport<E> {
    pub dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub strongly_solvable: bool,
    pub metabelian: bool,
    pub derived_length: Option<usize>,
    pub derived_series: Vec<Subspace<E>>,
    pub lower_central_dims: Vec<usize>,
    pub center: Subspace<E>,
    pub nilradical: Entry<Subspace<E>>,
    pub minimal_ideals: Entry<Vec<Subspace<E>>>,
    pub abelian_socle: Entry<Subspace<E>>,
    pub monolith: Entry<Subspace<E>>,
    pub frattini: Entry<Subspace<E>>,
    pub phi_free: Entry<bool>,
}

pub fn structure_report<F: Field>(
    l: &LieAlgebra<F>,
    strategy: Strategy,
    known_a: Option<bool>,
    cfg: &Config,
) -> StructureReport<F::Elem> {
    let finite = l.field().is_finite();
    let nil_method = match strategy {
        Strategy::Auto => NilradicalMethod::Auto,
        Strategy::Oracle => NilradicalMethod::Oracle,
        Strategy::Structural if finite && known_a == Some(true) => NilradicalMethod::ASeries,
        Strategy::Structural if finite => NilradicalMethod::ChiefSeries,
        Strategy::Structural => NilradicalMethod::Traceform,
    };
    let min_method = match strategy {
        Strategy::Oracle => MinimalIdealMethod::Oracle,
        _ => MinimalIdealMethod::Auto,
    };
    let minimal = Entry::from_result(minimal_ideals(l, min_method, cfg));
    let (abelian_socle, monolith) = match &minimal {
        Entry::Computed { value, method } => (
            Entry::Computed {
                value: abelian_socle(l, value),
                method: *method,
            },
            Entry::from_result(monolith(value).map(|w| (w, *method))),
        ),
        Entry::Absent { reason } => (
            Entry::Absent { reason: reason.clone() },
            Entry::Absent { reason: reason.clone() },
        ),
    };
    let frattini = match strategy {
        Strategy::Structural => Entry::Absent {
            reason: "the Frattini ideal is only computed by exhaustive search".into(),
        },
        _ if !finite => Entry::Absent {
            reason: "maximal subalgebras cannot be enumerated over an infinite field".into(),
        },
        _ => Entry::from_result(oracle::frattini(l, cfg).map(|p| (p, Method::Oracle))),
    };
    let phi_free = match &frattini {
        Entry::Computed { value, .. } => Entry::Computed {
            value: value.is_zero(),
            method: Method::Oracle,
        },
        Entry::Absent { .. } => Entry::from_result(is_phi_free(l, Strategy::Structural, known_a, cfg)),
    };
    StructureReport {
        dim: l.dim(),
        solvable: l.is_solvable(),
        nilpotent: l.is_nilpotent(),
        strongly_solvable: l.is_strongly_solvable(),
        metabelian: l.is_metabelian(),
        derived_length: l.derived_length(),
        derived_series: l.derived_series().terms,
        lower_central_dims: l.lower_central_series().dims(),
        center: l.center(),
        nilradical: Entry::from_result(nilradical(l, nil_method, cfg)),
        minimal_ideals: minimal,
        abelian_socle,
        monolith,
        frattini,
        phi_free,
    }
}

impl<E: Clone> StructureReport<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> Value {
        let enc = |s: &Subspace<E>| s.encode(f);
        json!({
            "dim": self.dim,
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "strongly_solvable": self.strongly_solvable,
            "metabelian": self.metabelian,
            "derived_length": self.derived_length,
            "derived_series": self.derived_series.iter().map(enc).collect::<Vec<_>>(),
            "lower_central_dims": self.lower_central_dims,
            "center": enc(&self.center),
            "nilradical": self.nilradical.to_json("basis", enc),
            "minimal_ideals": self.minimal_ideals.to_json("ideals", |v| Value::Array(v.iter().map(enc).collect())),
            "abelian_socle": self.abelian_socle.to_json("basis", enc),
            "monolith": self.monolith.to_json("basis", enc),
            "frattini": self.frattini.to_json("basis", enc),
            "phi_free": self.phi_free.to_json("value", |b| Value::Bool(*b)),
        })
    }
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
    fn nilradical_methods_agree_on_small_examples() {
        let cfg = Config::default();
        let two = generators::two_dim_nonabelian(gf(3)).unwrap();
        let b1 = two.span(vec![two.unit(0)]);
        for m in [
            NilradicalMethod::Oracle,
            NilradicalMethod::ASeries,
            NilradicalMethod::ChiefSeries,
            NilradicalMethod::Auto,
        ] {
            assert_eq!(nilradical(&two, m, &cfg).unwrap().0, b1);
        }
        let twoq = generators::two_dim_nonabelian(Rationals).unwrap();
        assert_eq!(nilradical_traceform(&twoq).unwrap(), twoq.span(vec![twoq.unit(0)]));
        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        let fp = l.span(vec![l.unit(2), l.unit(3)]);
        assert_eq!(nilradical(&l, NilradicalMethod::Oracle, &cfg).unwrap().0, fp);
        assert_eq!(nilradical(&l, NilradicalMethod::ASeries, &cfg).unwrap().0, fp);
        assert_eq!(nilradical_chief_series(&l, &cfg).unwrap(), fp);
        let h = generators::heisenberg(gf(2)).unwrap();
        assert!(matches!(nilradical_a_series(&h), Err(Error::VerificationFailed(_))));
        assert!(nilradical_chief_series(&h, &cfg).unwrap().is_full());
        assert!(matches!(nilradical_traceform(&h), Err(Error::MethodInapplicable(_))));
        let hq = generators::heisenberg(Rationals).unwrap();
        assert!(nilradical_traceform(&hq).unwrap().is_full());
    }

    #[test]
    fn chief_series_matches_oracle_on_random_algebras() {
        let cfg = Config::default();
        for seed in 0..40 {
            let p = if seed % 2 == 0 { 2 } else { 3 };
            let l = generators::random_solvable(seed, 5, gf(p)).unwrap();
            assert_eq!(
                nilradical_chief_series(&l, &cfg).unwrap(),
                oracle::nilradical(&l, &cfg).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn traceform_on_a_diagonal_action() {
        let q = Rationals;
        let lam = vec![vec![q.from_i64(1)], vec![q.from_i64(2)]];
        let l = generators::diagonal_action_algebra(q, &lam).unwrap();
        assert_eq!(nilradical_traceform(&l).unwrap(), l.span(vec![l.unit(0), l.unit(1)]));
    }

    #[test]
    fn minimal_ideals_and_monoliths() {
        let cfg = Config::default();
        let h = generators::heisenberg(gf(3)).unwrap();
        let (m, _) = minimal_ideals(&h, MinimalIdealMethod::Auto, &cfg).unwrap();
        assert_eq!(monolith(&m).unwrap(), h.span(vec![h.unit(2)]));
        let two = generators::two_dim_nonabelian(gf(3)).unwrap();
        let sum = two.direct_sum(&two).unwrap();
        let (m, _) = minimal_ideals(&sum, MinimalIdealMethod::Auto, &cfg).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(monolith(&m), Err(Error::NotMonolithic(2)));
        assert_eq!(oracle::minimal_ideals(&sum, &cfg).unwrap(), m);
        let hq = generators::heisenberg(Rationals).unwrap();
        let (m, method) = minimal_ideals(&hq, MinimalIdealMethod::Auto, &cfg).unwrap();
        assert_eq!(method, Method::Chop);
        assert_eq!(m, vec![hq.span(vec![hq.unit(2)])]);
    }

    #[test]
    fn phi_free_routes() {
        let cfg = Config::default();
        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        for s in [Strategy::Oracle, Strategy::Structural] {
            assert!(is_phi_free(&l, s, None, &cfg).unwrap().0);
            assert!(is_phi_free(&l, s, Some(true), &cfg).unwrap().0);
        }
        // e together with the x's
        let b = l.span(vec![l.unit(0), l.unit(2), l.unit(3)]);
        let sub = l.induced(&b).unwrap().algebra;
        for s in [Strategy::Oracle, Strategy::Structural] {
            assert!(!is_phi_free(&sub, s, None, &cfg).unwrap().0);
        }
        let h = generators::heisenberg(gf(2)).unwrap();
        assert!(!is_phi_free(&h, Strategy::Structural, None, &cfg).unwrap().0);
        assert!(frattini(&h, FrattiniMethod::Structural, &cfg).is_err());
    }

    #[test]
    fn reports() {
        let cfg = Config::default();
        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        let r = structure_report(&l, Strategy::Auto, None, &cfg);
        let fp = l.span(vec![l.unit(2), l.unit(3)]);
        assert_eq!(r.nilradical.value(), Some(&fp));
        assert_eq!(r.monolith.value(), Some(&fp));
        assert!(r.center.is_zero());
        assert_eq!(r.frattini.value().map(Subspace::dim), Some(0));
        assert!(!r.strongly_solvable);
        assert_eq!(r.derived_length, Some(3));
        let j = r.to_json(l.field());
        assert_eq!(j["nilradical"]["method"], "oracle");
        let two = generators::two_dim_nonabelian(Rationals).unwrap();
        let r = structure_report(&two, Strategy::Auto, None, &cfg);
        assert_eq!(r.nilradical.value(), r.monolith.value());
        assert!(matches!(r.frattini, Entry::Absent { .. }));
        assert_eq!(r.phi_free.value(), Some(&true));
    }
}
