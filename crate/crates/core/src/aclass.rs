//! Deciding whether a solvable Lie algebra is an A-algebra (every nilpotent
//! subalgebra abelian), plus the structural characterizations used as
//! certificates: invertible action on `L^2`, the monolithic criterion, the
//! monolithic classification, the diagonal form and the cyclic
//! decomposition of non-strongly-solvable φ-free algebras.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::{Config, Deadline};
use crate::decomp;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::{self, is_zero_vec, Matrix, Subspace};
use crate::oracle::{self, PairStrategy, Witness};
use crate::structure::{self, MinimalIdealMethod, NilradicalMethod, Strategy};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AMethod {
    /// Exhaustive pair search; finite fields only.
    OraclePairs,
    /// Structural certificates first, pair search or random witness search
    /// as the fallback.
    Structural,
    /// Pair search when it fits the budget, structural otherwise.
    #[default]
    Auto,
}

/// What settled an A-verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ARoute {
    OraclePairs,
    /// Abelian, or a nilpotent non-abelian subalgebra found directly (the
    /// algebra itself or its nilpotent derived algebra).
    Nilpotent,
    /// Metabelian, split over `L^2`, every nonzero `b` in the complement
    /// acting invertibly on `L^2`.
    InvertibleAction,
    /// Diagonal action of an abelian complement on an abelian `L^2`.
    DiagonalForm,
    /// Two ideals with trivial intersection, decided on the quotients.
    QuotientLift,
    /// The same, with the two ideals spanning the algebra.
    DirectSum,
    /// Monolithic and strongly solvable, decided by the invertible-action
    /// criterion.
    MonolithicCriterion,
    /// The four cyclic-decomposition conditions for φ-free algebras that are
    /// not strongly solvable.
    CyclicDecomposition,
    /// Seeded random search for a witness pair.
    WitnessSearch,
}

/// The result of an A-check. A negative verdict always carries a witness
/// that [`oracle::replay_witness`] accepts.
#[derive(Clone, Debug, PartialEq)]
pub struct ACertificate<E> {
    pub verdict: bool,
    pub route: ARoute,
    pub witness: Option<Witness<E>>,
    pub q_set: Option<QSet<E>>,
    /// Set when a finite field stood in for an algebraically closed one.
    pub closed_field_proxy: bool,
}

impl<E: Clone> ACertificate<E> {
    fn positive(route: ARoute) -> Self {
        ACertificate {
            verdict: true,
            route,
            witness: None,
            q_set: None,
            closed_field_proxy: false,
        }
    }

    fn negative(route: ARoute, w: Witness<E>) -> Self {
        ACertificate {
            verdict: false,
            route,
            witness: Some(w),
            q_set: None,
            closed_field_proxy: false,
        }
    }

    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> Value {
        let mut v = json!({
            "verdict": self.verdict,
            "route": self.route,
            "closed_field_proxy": self.closed_field_proxy,
        });
        if let Some(w) = &self.witness {
            v["witness"] = witness_json(f, w);
        }
        if let Some(q) = &self.q_set {
            v["q_set"] = q.to_json(f);
        }
        v
    }
}

pub fn vec_json<F: Field>(f: &F, v: &[F::Elem]) -> Value {
    Value::Array(v.iter().map(|a| f.encode(a)).collect())
}

pub fn witness_json<F: Field>(f: &F, w: &Witness<F::Elem>) -> Value {
    json!({ "x": vec_json(f, &w.x), "y": vec_json(f, &w.y) })
}

/// Decides the A-property.
pub fn is_a<F: Field>(l: &LieAlgebra<F>, method: AMethod, cfg: &Config) -> Result<ACertificate<F::Elem>> {
    let mut cert = match method {
        AMethod::OraclePairs => by_pairs(l, cfg)?,
        AMethod::Structural => structural(l, cfg)?,
        AMethod::Auto => {
            let mut done = None;
            if l.field().is_finite() {
                match by_pairs(l, cfg) {
                    Ok(c) => done = Some(c),
                    Err(Error::BudgetExceeded(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            match done {
                Some(c) => c,
                None => structural(l, cfg)?,
            }
        }
    };
    if cert.verdict || l.field().characteristic() == 0 {
        cert.q_set = match q_set(l, cfg) {
            Ok(q) => Some(q),
            Err(Error::BudgetExceeded(_) | Error::MethodInapplicable(_) | Error::VerificationFailed(_)) => None,
            Err(e) => return Err(e),
        };
    }
    Ok(cert)
}

fn by_pairs<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<ACertificate<F::Elem>> {
    Ok(match oracle::pair_search(l, cfg, PairStrategy::Heisenberg)? {
        None => ACertificate::positive(ARoute::OraclePairs),
        Some(w) => ACertificate::negative(ARoute::OraclePairs, w),
    })
}

/// Errors that only mean "this route does not apply here".
fn inapplicable(e: &Error) -> bool {
    matches!(
        e,
        Error::BudgetExceeded(_)
            | Error::MethodInapplicable(_)
            | Error::FieldTooSmall { .. }
            | Error::SamplingInconclusive(_)
            | Error::SplitFailed(_)
            | Error::NotMetabelian
            | Error::Undecided(_)
            | Error::VerificationFailed(_)
            | Error::NotNilpotentAction
            | Error::DecompositionMismatch(_)
    )
}

/// Runs a route; inapplicable outcomes become `None`.
fn attempt<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if inapplicable(&e) => Ok(None),
        Err(e) => Err(e),
    }
}

fn structural<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<ACertificate<F::Elem>> {
    if l.is_abelian() {
        return Ok(ACertificate::positive(ARoute::Nilpotent));
    }
    if let Some(w) = oracle::witness_in(l, &l.full()) {
        return Ok(ACertificate::negative(ARoute::Nilpotent, w));
    }
    if !l.is_solvable() {
        return fallback(l, cfg, "the structural routes need a solvable algebra");
    }
    let d = l.derived_algebra();
    if let Some(w) = oracle::witness_in(l, &d) {
        return Ok(ACertificate::negative(ARoute::Nilpotent, w));
    }
    let metabelian = l.is_abelian_space(&d);
    if metabelian {
        if attempt(invertible_action_check(l, cfg))? == Some(true) {
            return Ok(ACertificate::positive(ARoute::InvertibleAction));
        }
        if let Some(Some(_)) = attempt(diagonal_form(l))? {
            return Ok(ACertificate::positive(ARoute::DiagonalForm));
        }
    }

    let minimal = attempt(structure::minimal_ideals(l, MinimalIdealMethod::Auto, cfg))?.map(|(m, _)| m);
    if let Some(minimal) = &minimal {
        if minimal.len() >= 2 {
            if let Some(cert) = quotient_lift(l, &minimal[0], &minimal[1], cfg)? {
                return Ok(cert);
            }
        }
        if minimal.len() == 1 && l.is_strongly_solvable() {
            // The criterion is an equivalence here, so a failed
            // invertible-action test means the algebra is not an A-algebra.
            let rhs = attempt(criterion_rhs(l, cfg))?;
            if rhs == Some(false) {
                if let Some(w) = metabelian_witness(l, cfg)? {
                    return Ok(ACertificate::negative(ARoute::MonolithicCriterion, w));
                }
                if let Some(c) = attempt(fallback(l, cfg, "no witness found"))? {
                    return Ok(c);
                }
                return Err(Error::Undecided(
                    "the monolithic criterion fails, but no witness pair was found".into(),
                ));
            }
        }
    }

    if l.field().is_finite() && !l.is_strongly_solvable() {
        let phi_free = attempt(structure::is_phi_free(l, Strategy::Auto, None, cfg))?.map(|(b, _)| b);
        if phi_free == Some(true) {
            if let Some(rep) = attempt(cyclic_decomposition_check(l, cfg, CyclicReading::PerIdeal))? {
                if rep.conclusion {
                    let mut c = ACertificate::positive(ARoute::CyclicDecomposition);
                    c.closed_field_proxy = true;
                    return Ok(c);
                }
            }
        }
    }
    if metabelian {
        if let Some(w) = metabelian_witness(l, cfg)? {
            return Ok(ACertificate::negative(ARoute::WitnessSearch, w));
        }
    }
    fallback(l, cfg, "no structural route applies")
}

/// Pair search when affordable, random witness search otherwise.
fn fallback<F: Field>(l: &LieAlgebra<F>, cfg: &Config, why: &str) -> Result<ACertificate<F::Elem>> {
    if l.field().is_finite() {
        match by_pairs(l, cfg) {
            Err(Error::BudgetExceeded(m)) => {
                if let Some(w) = random_witness_search(l, cfg) {
                    return Ok(ACertificate::negative(ARoute::WitnessSearch, w));
                }
                return Err(Error::Undecided(format!("{why}; pair search too large ({m})")));
            }
            other => return other,
        }
    }
    match random_witness_search(l, cfg) {
        Some(w) => Ok(ACertificate::negative(ARoute::WitnessSearch, w)),
        None => Err(Error::Undecided(format!("{why}; no witness found by random search"))),
    }
}

/// `L` is an A-algebra iff `L/I` and `L/J` are, when `I ∩ J = 0`.
fn quotient_lift<F: Field>(
    l: &LieAlgebra<F>,
    i: &Subspace<F::Elem>,
    j: &Subspace<F::Elem>,
    cfg: &Config,
) -> Result<Option<ACertificate<F::Elem>>> {
    if !l.intersect(i, j).is_zero() {
        return Ok(None);
    }
    let route = if l.sum(i, j).is_full() {
        ARoute::DirectSum
    } else {
        ARoute::QuotientLift
    };
    let mut all_positive = true;
    for ideal in [i, j] {
        let q = l.quotient(ideal)?;
        match attempt(structural(&q.algebra, cfg))? {
            Some(c) if c.verdict => {}
            Some(c) => {
                let w = c.witness.expect("negative certificates carry witnesses");
                let (x, y) = (q.lift_vec(&w.x), q.lift_vec(&w.y));
                let s = l.generated_subalgebra(&[x, y]);
                return Ok(lift_witness(l, &s, cfg)?.map(|w| ACertificate::negative(route, w)));
            }
            None => all_positive = false,
        }
    }
    Ok(all_positive.then(|| ACertificate::positive(route)))
}

/// A witness inside `s`, a subalgebra known not to be an A-algebra.
fn lift_witness<F: Field>(
    l: &LieAlgebra<F>,
    s: &Subspace<F::Elem>,
    cfg: &Config,
) -> Result<Option<Witness<F::Elem>>> {
    if let Some(w) = oracle::witness_in(l, s) {
        return Ok(Some(w));
    }
    if s.dim() == l.dim() {
        return Ok(attempt(fallback(l, cfg, "lifting a quotient witness"))?.and_then(|c| c.witness));
    }
    let ind = l.induced(s)?;
    Ok(attempt(structural(&ind.algebra, cfg))?
        .and_then(|c| c.witness)
        .map(|w| Witness {
            x: ind.embed(&w.x),
            y: ind.embed(&w.y),
        }))
}

/// For metabelian `L`: `x ∈ L^2` and `y` with `x (ad y)^2 = 0 ≠ x ad y`.
/// Then `x, y, [x,y]` span a Heisenberg subalgebra.
fn metabelian_witness<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<Option<Witness<F::Elem>>> {
    let f = l.field();
    let d = l.derived_algebra();
    if !l.is_abelian_space(&d) || d.is_zero() {
        return Ok(None);
    }
    let comp = linalg::complement(f, &d, &l.full())?;
    let try_b = |b: &[F::Elem]| -> Option<Witness<F::Elem>> {
        let m = action_on(l, b, &d);
        let k1 = linalg::left_kernel(f, &m);
        let k2 = linalg::left_kernel(f, &m.pow(f, 2));
        let c = linalg::complement(f, &k1, &k2).ok()?;
        let x = d.vector(f, c.basis().first()?);
        let w = Witness { x, y: b.to_vec() };
        oracle::replay_witness(l, &w).then_some(w)
    };
    for b in candidates(l, &comp, cfg) {
        if let Some(w) = try_b(&b) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Vectors of `s` worth trying: every projective point when there are few,
/// otherwise basis vectors, pairwise sums and seeded random vectors.
fn candidates<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F::Elem>, cfg: &Config) -> Vec<Vec<F::Elem>> {
    let f = l.field();
    let k = s.dim();
    if let Some(elems) = f.elements() {
        let count = oracle::projective_count(elems.len() as u64, k);
        if count <= 4096 {
            return (0..count)
                .map(|i| s.vector(f, &oracle::projective_point(f, &elems, k, i)))
                .collect();
        }
    }
    let b = s.basis();
    let mut out: Vec<Vec<F::Elem>> = b.to_vec();
    for i in 0..k {
        for j in i + 1..k {
            out.push(linalg::add_vec(f, &b[i], &b[j]));
            out.push(linalg::sub_vec(f, &b[i], &b[j]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..64 {
        let c: Vec<_> = (0..k).map(|_| f.random(&mut rng)).collect();
        let v = s.vector(f, &c);
        if !is_zero_vec(f, &v) {
            out.push(v);
        }
    }
    out
}

/// Seeded search for a Heisenberg triple. Finding nothing proves nothing.
pub fn random_witness_search<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Option<Witness<F::Elem>> {
    let f = l.field();
    let full = l.full();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    for x in candidates(l, &full, cfg) {
        let w = oracle::partner_space(l, &x, PairStrategy::Heisenberg);
        if w.is_zero() {
            continue;
        }
        let mut ys: Vec<Vec<F::Elem>> = w.basis().to_vec();
        ys.extend((0..8).map(|_| {
            let c: Vec<_> = (0..w.dim()).map(|_| f.random(&mut rng)).collect();
            w.vector(f, &c)
        }));
        for y in ys {
            if oracle::pair_ok(l, &x, &y, PairStrategy::Heisenberg) {
                return Some(Witness { x, y });
            }
        }
    }
    None
}

/// Matrix of `v -> [v, x]` on the `ad x`-invariant subspace `s`, in the
/// coordinates of the RREF basis of `s`.
pub fn action_on<F: Field>(l: &LieAlgebra<F>, x: &[F::Elem], s: &Subspace<F::Elem>) -> Matrix<F::Elem> {
    let rows = s.basis().iter().map(|v| s.coords(&l.bracket(v, x))).collect();
    Matrix::from_rows(s.dim(), rows).expect("coordinates have the subspace dimension")
}

// ---------------------------------------------------------------------------
// Q(L)

/// `Q(L) = {c : (ad c)^2 = 0}`.
///
/// Over a finite field every element is listed. Over the rationals only the
/// containment `N ⊆ Q(L)` is tested, through the polarized identity
/// `ad(u) ad(v) + ad(v) ad(u) = 0` on a basis of the nilradical `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct QSet<E> {
    pub elements: Option<Vec<Vec<E>>>,
    /// Span of the elements; the nilradical over the rationals.
    pub span: Subspace<E>,
    pub is_subspace: Option<bool>,
    pub contains_nilradical: Option<bool>,
}

impl<E: Clone> QSet<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> Value {
        let mut v = json!({ "span": self.span.encode(f) });
        if let Some(els) = &self.elements {
            v["size"] = json!(els.len());
        }
        if let Some(b) = self.is_subspace {
            v["is_subspace"] = json!(b);
        }
        if let Some(b) = self.contains_nilradical {
            v["contains_nilradical"] = json!(b);
        }
        v
    }
}

pub fn q_set<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<QSet<F::Elem>> {
    let f = l.field();
    let n = l.dim();
    match f.elements() {
        Some(elems) => {
            let total = (elems.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
            if total > cfg.budget.max_pairs as u128 {
                return Err(Error::BudgetExceeded(format!(
                    "{total} elements exceed the limit of {}",
                    cfg.budget.max_pairs
                )));
            }
            let deadline = Deadline::start(&cfg.budget);
            deadline.check("Q(L) enumeration")?;
            let hits = cfg.exec.map_range(total as usize, |i| {
                let v = oracle::nth_vector(&elems, n, i as u128);
                l.ad(&v).pow(f, 2).is_zero(f).then_some(v)
            });
            let elements: Vec<_> = hits.into_iter().flatten().collect();
            let span = l.span(elements.clone());
            let expected = (elems.len() as u128).pow(span.dim() as u32);
            Ok(QSet {
                is_subspace: Some(expected == elements.len() as u128),
                elements: Some(elements),
                span,
                contains_nilradical: None,
            })
        }
        None => {
            if !l.is_solvable() {
                return Err(Error::MethodInapplicable("the containment test needs a solvable algebra".into()));
            }
            let (nil, _) = structure::nilradical(l, NilradicalMethod::Auto, cfg)?;
            let ads: Vec<_> = nil.basis().iter().map(|v| l.ad(v)).collect();
            let contained = (0..ads.len()).all(|i| {
                (i..ads.len()).all(|j| {
                    let s = linalg::matmul(f, &ads[i], &ads[j]).add(f, &linalg::matmul(f, &ads[j], &ads[i]));
                    s.is_zero(f)
                })
            });
            Ok(QSet {
                elements: None,
                span: nil,
                is_subspace: None,
                contains_nilradical: Some(contained),
            })
        }
    }
}

/// For an A-algebra in characteristic other than 2 and 3, `Q(L)` is a
/// subspace equal to the nilradical. Returns whether that holds here.
pub fn q_set_matches_nilradical<F: Field>(l: &LieAlgebra<F>, q: &QSet<F::Elem>, cfg: &Config) -> Result<bool> {
    let p = l.field().characteristic();
    if p == 2 || p == 3 {
        return Err(Error::CharacteristicExcluded(p));
    }
    if let Some(c) = q.contains_nilradical {
        return Ok(c);
    }
    let (nil, _) = structure::nilradical(l, NilradicalMethod::Auto, cfg)?;
    Ok(q.is_subspace == Some(true) && q.span == nil)
}

// ---------------------------------------------------------------------------
// invertible action and the monolithic criterion

/// For metabelian `L = L^2 ∔ B` with `B` a subalgebra: true iff every
/// nonzero `b ∈ B` acts invertibly on `L^2`, which certifies `L` as a
/// strongly solvable A-algebra. The test does not depend on the choice of
/// `B` because `L^2` is abelian.
///
/// Over a finite field every projective point of `B` is checked. Over the
/// rationals the answer is exact when `dim B ≤ 1`; otherwise a failing
/// sample gives `false` and passing samples give `SamplingInconclusive`.
pub fn invertible_action_check<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<bool> {
    let f = l.field();
    let d = l.derived_algebra();
    if !l.is_abelian_space(&d) {
        return Err(Error::NotMetabelian);
    }
    if d.is_zero() {
        return Ok(true);
    }
    let b = decomp::subalgebra_complement(l, &d)?
        .ok_or_else(|| Error::SplitFailed("L^2 has no complementary subalgebra".into()))?;
    let mats: Vec<Matrix<F::Elem>> = b.basis().iter().map(|v| action_on(l, v, &d)).collect();
    let m = d.dim();
    let combine = |t: &[F::Elem]| {
        let mut acc = Matrix::zero(f, m, m);
        for (c, mk) in t.iter().zip(&mats) {
            acc = acc.add(f, &mk.scale(f, c));
        }
        acc
    };
    let k = b.dim();
    if let Some(elems) = f.elements() {
        let count = oracle::projective_count(elems.len() as u64, k);
        if count > cfg.budget.max_pairs as u128 {
            return Err(Error::BudgetExceeded(format!(
                "{count} complement directions exceed the limit of {}",
                cfg.budget.max_pairs
            )));
        }
        let singular = cfg.exec.find_first_range(count as usize, |i| {
            let t = oracle::projective_point(f, &elems, k, i as u128);
            (combine(&t).rank(f) < m).then_some(())
        });
        return Ok(singular.is_none());
    }
    if k <= 1 {
        return Ok(mats.iter().all(|mk| mk.rank(f) == m));
    }
    let mut samples: Vec<Vec<F::Elem>> = (0..k).map(|i| linalg::unit_vec(f, k, i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    samples.extend((0..64).map(|_| (0..k).map(|_| f.random(&mut rng)).collect::<Vec<_>>()));
    samples.retain(|t| !is_zero_vec(f, t));
    if samples.iter().any(|t| combine(t).rank(f) < m) {
        return Ok(false);
    }
    Err(Error::SamplingInconclusive(samples.len()))
}

/// Right-hand side of the monolithic criterion: metabelian, split over
/// `L^2`, and invertible action of every nonzero complement element.
fn criterion_rhs<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<bool> {
    let d = l.derived_algebra();
    if !l.is_abelian_space(&d) {
        return Ok(false);
    }
    if decomp::subalgebra_complement(l, &d)?.is_none() {
        return Ok(false);
    }
    invertible_action_check(l, cfg)
}

/// For monolithic `L`, returns `(strongly solvable and A, rhs)` where `rhs`
/// is the invertible-action condition; the two always agree.
pub fn monolithic_criterion<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<(bool, bool)> {
    let (minimal, _) = structure::minimal_ideals(l, MinimalIdealMethod::Auto, cfg)?;
    if minimal.len() != 1 {
        return Err(Error::NotMonolithic(minimal.len()));
    }
    let method = if l.field().is_finite() {
        AMethod::OraclePairs
    } else {
        AMethod::Structural
    };
    let lhs = l.is_strongly_solvable() && is_a(l, method, cfg)?.verdict;
    Ok((lhs, criterion_rhs(l, cfg)?))
}

// ---------------------------------------------------------------------------
// eigenvalues

/// The unique eigenvalue of `m` and its nilpotency index, when `m` has a
/// single eigenvalue lying in the field.
fn single_eigenvalue<F: Field>(f: &F, m: &Matrix<F::Elem>, what: &str) -> Result<(F::Elem, u32)> {
    let n = m.nrows();
    let roots = f.roots(&linalg::charpoly(f, m)).unwrap_or_default();
    let Some(s) = roots.first() else {
        return Err(Error::FieldTooSmall {
            reason: format!("no eigenvalue of {what} lies in the field"),
            suggested_degree: Some(n.max(2) as u32),
        });
    };
    if roots.len() > 1 {
        return Err(Error::VerificationFailed(format!("{what} has {} distinct eigenvalues", roots.len())));
    }
    let shifted = m.sub(f, &Matrix::identity(f, n).scale(f, s));
    let mut pow = Matrix::identity(f, n);
    for k in 1..=n.max(1) as u32 {
        pow = linalg::matmul(f, &pow, &shifted);
        if pow.is_zero(f) {
            return Ok((s.clone(), k));
        }
    }
    Err(Error::FieldTooSmall {
        reason: format!("{what} has eigenvalues outside the field"),
        suggested_degree: Some(n as u32),
    })
}

// ---------------------------------------------------------------------------
// monolithic classification

/// The two shapes of a monolithic solvable A-algebra of dimension at least 2.
#[derive(Clone, Debug, PartialEq)]
pub enum MonolithicClass<E> {
    /// `L = L^2 ∔ Fb`, `L^2 (ad b - λ)^k = 0`, `dim W = 1`.
    Triangular { b: Vec<E>, lambda: E, k: u32, monolith_dim: usize },
    /// `L = L^(2) ∔ (Fb + Fn)`, `[n, b] = n`,
    /// `L^(2) (ad n - λ)^k = 0`, `L^(2) ((ad b)^p - ad b - μ^p)^k = 0`,
    /// `dim W = p`. `b` has already been shifted by `alpha · n` so that
    /// `μ ≠ 0`.
    Cyclic {
        b: Vec<E>,
        n: Vec<E>,
        alpha: E,
        lambda: E,
        mu: E,
        k: u32,
        monolith_dim: usize,
    },
}

impl<E: Clone> MonolithicClass<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> Value {
        match self {
            MonolithicClass::Triangular { b, lambda, k, monolith_dim } => json!({
                "case": "triangular",
                "b": vec_json(f, b),
                "lambda": f.encode(lambda),
                "k": k,
                "monolith_dim": monolith_dim,
            }),
            MonolithicClass::Cyclic { b, n, alpha, lambda, mu, k, monolith_dim } => json!({
                "case": "cyclic",
                "b": vec_json(f, b),
                "n": vec_json(f, n),
                "alpha": f.encode(alpha),
                "lambda": f.encode(lambda),
                "mu": f.encode(mu),
                "k": k,
                "monolith_dim": monolith_dim,
            }),
        }
    }
}

pub fn classify_monolithic<F: Field>(l: &LieAlgebra<F>, cfg: &Config) -> Result<MonolithicClass<F::Elem>> {
    let f = l.field();
    if l.dim() <= 1 {
        return Err(Error::MethodInapplicable("the classification needs dimension at least 2".into()));
    }
    if !l.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let (minimal, _) = structure::minimal_ideals(l, MinimalIdealMethod::Auto, cfg)?;
    let w = structure::monolith(&minimal)?;
    if !is_a(l, AMethod::Auto, cfg)?.verdict {
        return Err(Error::NotAAlgebra);
    }
    let d1 = l.derived_algebra();
    if l.is_abelian_space(&d1) {
        let b = decomp::subalgebra_complement(l, &d1)?
            .ok_or_else(|| Error::SplitFailed("L^2 has no complementary subalgebra".into()))?;
        if b.dim() != 1 {
            return Err(Error::FieldTooSmall {
                reason: format!("complement of L^2 has dimension {}", b.dim()),
                suggested_degree: Some(w.dim() as u32),
            });
        }
        let bv = b.basis()[0].clone();
        let (lambda, k) = single_eigenvalue(f, &action_on(l, &bv, &d1), "ad b on L^2")?;
        if f.is_zero(&lambda) {
            return Err(Error::VerificationFailed("ad b is nilpotent on L^2".into()));
        }
        return Ok(MonolithicClass::Triangular {
            b: bv,
            lambda,
            k,
            monolith_dim: w.dim(),
        });
    }

    let p = f.characteristic();
    if p == 0 {
        return Err(Error::VerificationFailed("a non-metabelian A-algebra needs positive characteristic".into()));
    }
    let d2 = l.bracket_spaces(&d1, &d1);
    if !l.is_abelian_space(&d2) || d1.dim() != d2.dim() + 1 {
        return Err(Error::FieldTooSmall {
            reason: "L^(1)/L^(2) is not one-dimensional".into(),
            suggested_degree: None,
        });
    }
    let n = linalg::complement(f, &d2, &d1)?.basis()[0].clone();
    let b0 = decomp::fitting_single(l, &n).l0;
    if b0.dim() != 2 {
        return Err(Error::VerificationFailed(format!("Fitting null component of ad n has dimension {}", b0.dim())));
    }
    let nspan = l.span(vec![n.clone()]);
    let beta = linalg::complement(f, &nspan, &b0)?.basis()[0].clone();
    let t = nspan.coords(&l.bracket(&n, &beta))[0].clone();
    let b = linalg::scale_vec(f, &f.inv(&t).ok_or(Error::DivisionByZero)?, &beta);
    let mn = action_on(l, &n, &d2);
    let (lambda, kn) = single_eigenvalue(f, &mn, "ad n on L^(2)")?;
    let elems = f.elements().ok_or(Error::InfiniteField)?;
    for alpha in elems {
        let bb = linalg::add_vec(f, &b, &linalg::scale_vec(f, &alpha, &n));
        let mb = action_on(l, &bb, &d2);
        let pm = mb.pow(f, p as u32).sub(f, &mb);
        let (s, kb) = match single_eigenvalue(f, &pm, "(ad b)^p - ad b on L^(2)") {
            Ok(v) => v,
            Err(Error::FieldTooSmall { .. }) => continue,
            Err(e) => return Err(e),
        };
        if f.is_zero(&s) {
            continue;
        }
        let mu = f.pth_root(&s).ok_or(Error::CharacteristicZero)?;
        return Ok(MonolithicClass::Cyclic {
            b: bb,
            n,
            alpha,
            lambda,
            mu,
            k: kn.max(kb),
            monolith_dim: w.dim(),
        });
    }
    Err(Error::FieldTooSmall {
        reason: "no shift b + αn has a nonzero eigenvalue for (ad b)^p - ad b".into(),
        suggested_degree: Some(p as u32),
    })
}

// ---------------------------------------------------------------------------
// diagonal form

/// `L = Σ F a_i + Σ F b_j` with `[a_i, b_j] = λ_ij a_i` and all other
/// products zero. The `a_i` span `L^2`; basis vectors of `Z(L)` outside
/// `L^2` appear among the `b_j` with zero action.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalForm<E> {
    pub a: Vec<Vec<E>>,
    pub b: Vec<Vec<E>>,
    /// `lambda[i][j]` is the eigenvalue of `ad b_j` on `a_i`.
    pub lambda: Vec<Vec<E>>,
}

impl<E: Clone> DiagonalForm<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> Value {
        json!({
            "a": self.a.iter().map(|v| vec_json(f, v)).collect::<Vec<_>>(),
            "b": self.b.iter().map(|v| vec_json(f, v)).collect::<Vec<_>>(),
            "lambda": self.lambda.iter().map(|r| vec_json(f, r)).collect::<Vec<_>>(),
        })
    }
}

/// Searches for the diagonal form: an abelian complement `B` of an abelian
/// `L^2` whose action on `L^2` is simultaneously diagonalizable over the
/// field. `Ok(None)` when no such form exists over this field;
/// `FieldTooSmall` when an action has eigenvalues outside the field.
pub fn diagonal_form<F: Field>(l: &LieAlgebra<F>) -> Result<Option<DiagonalForm<F::Elem>>> {
    let f = l.field();
    let d = l.derived_algebra();
    if !l.is_abelian_space(&d) {
        return Ok(None);
    }
    let Some(b) = decomp::abelian_complement(l, &d)? else {
        return Ok(None);
    };
    let m = d.dim();
    let mats: Vec<Matrix<F::Elem>> = b.basis().iter().map(|v| action_on(l, v, &d)).collect();
    // Joint eigenspaces as subspaces of the coordinate space of L^2.
    let mut pieces = vec![Subspace::full(f, m)];
    for mk in &mats {
        let mut next = Vec::new();
        for piece in &pieces {
            let restricted = Matrix::from_rows(
                piece.dim(),
                piece
                    .basis()
                    .iter()
                    .map(|v| piece.coords(&mk.apply(f, v)))
                    .collect(),
            )?;
            let roots = f.roots(&linalg::charpoly(f, &restricted)).ok_or_else(|| Error::FieldTooSmall {
                reason: "eigenvalues could not be computed exactly".into(),
                suggested_degree: None,
            })?;
            let mut covered = 0;
            for s in roots {
                let shifted = restricted.sub(f, &Matrix::identity(f, piece.dim()).scale(f, &s));
                let eig = linalg::left_kernel(f, &shifted);
                covered += eig.dim();
                next.push(Subspace::span(
                    f,
                    m,
                    eig.basis().iter().map(|c| piece.vector(f, c)).collect(),
                ));
            }
            if covered < piece.dim() {
                if !splits_over_field(f, &restricted) {
                    return Err(Error::FieldTooSmall {
                        reason: "the action on L^2 has eigenvalues outside the field".into(),
                        suggested_degree: Some(piece.dim() as u32),
                    });
                }
                return Ok(None);
            }
        }
        pieces = next;
    }
    let mut a = Vec::new();
    let mut lambda = Vec::new();
    for piece in &pieces {
        for c in piece.basis() {
            let row: Vec<F::Elem> = mats
                .iter()
                .map(|mk| {
                    let img = mk.apply(f, c);
                    let lead = c.iter().position(|x| !f.is_zero(x)).expect("basis vectors are nonzero");
                    f.div(&img[lead], &c[lead]).expect("nonzero pivot")
                })
                .collect();
            a.push(d.vector(f, c));
            lambda.push(row);
        }
    }
    let form = DiagonalForm {
        a,
        b: b.basis().to_vec(),
        lambda,
    };
    check_diagonal_form(l, &form)?;
    Ok(Some(form))
}

/// True if the characteristic polynomial of `m` splits into linear factors
/// over the field (generalized eigenspaces fill the space).
fn splits_over_field<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    let n = m.nrows();
    let Some(roots) = f.roots(&linalg::charpoly(f, m)) else {
        return false;
    };
    let total: usize = roots
        .iter()
        .map(|s| {
            let shifted = m.sub(f, &Matrix::identity(f, n).scale(f, s));
            linalg::left_kernel(f, &shifted.pow(f, n as u32)).dim()
        })
        .sum();
    total == n
}

/// Re-checks every relation of a diagonal form.
pub fn check_diagonal_form<F: Field>(l: &LieAlgebra<F>, form: &DiagonalForm<F::Elem>) -> Result<()> {
    let f = l.field();
    let mut all = form.a.clone();
    all.extend(form.b.iter().cloned());
    if l.span(all.clone()).dim() != l.dim() || all.len() != l.dim() {
        return Err(Error::VerificationFailed("diagonal form vectors are not a basis".into()));
    }
    for (i, ai) in form.a.iter().enumerate() {
        for (j, bj) in form.b.iter().enumerate() {
            let want = linalg::scale_vec(f, &form.lambda[i][j], ai);
            if l.bracket(ai, bj) != want {
                return Err(Error::VerificationFailed(format!("[a_{i}, b_{j}] is not λ a_{i}")));
            }
        }
    }
    for set in [&form.a, &form.b] {
        for x in set.iter() {
            for y in set.iter() {
                if !is_zero_vec(f, &l.bracket(x, y)) {
                    return Err(Error::VerificationFailed("diagonal form has a nonzero product".into()));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// cyclic decomposition

/// How to read the unsubscripted `b` in `[a_ij, b] = (λ_i + j) a_ij`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicReading {
    /// The `b_i` attached to `A_i`.
    #[default]
    PerIdeal,
    /// A single `b ∈ B` acting like every `b_i` at once.
    Shared,
}

/// Data for one minimal ideal `A_i`: `[c_i, b_i] = c_i`,
/// `[a_ij, c_i] = a_i(j+1)` with indices mod `p`, and
/// `[a_ij, b_i] = (λ_i + j) a_ij` for `j = 1..p`.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicIdealData<E> {
    pub c: Vec<E>,
    pub b: Vec<E>,
    pub basis: Vec<Vec<E>>,
    pub lambda: E,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CyclicReport<E> {
    /// `L^(2)`, `C`, `B` when the first condition holds.
    pub decomposition: Option<[Subspace<E>; 3]>,
    pub conditions: [bool; 4],
    pub ideals: Vec<CyclicIdealData<E>>,
    /// Whether one `b` acts like every `b_i`; `None` if the per-ideal data
    /// is incomplete.
    pub shared_b: Option<bool>,
    pub reading: CyclicReading,
    /// All conditions under the chosen reading.
    pub conclusion: bool,
    pub closed_field_proxy: bool,
}

impl<E: Clone> CyclicReport<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> Value {
        json!({
            "conditions": self.conditions,
            "decomposition": self.decomposition.as_ref().map(|d| d.iter().map(|s| s.encode(f)).collect::<Vec<_>>()),
            "ideals": self.ideals.iter().map(|d| json!({
                "c": vec_json(f, &d.c),
                "b": vec_json(f, &d.b),
                "basis": d.basis.iter().map(|v| vec_json(f, v)).collect::<Vec<_>>(),
                "lambda": f.encode(&d.lambda),
            })).collect::<Vec<_>>(),
            "shared_b": self.shared_b,
            "reading": self.reading,
            "conclusion": self.conclusion,
            "closed_field_proxy": self.closed_field_proxy,
        })
    }
}

/// Evaluates the four conditions that characterize A-algebras among φ-free
/// solvable algebras that are not strongly solvable, with a finite field
/// standing in for an algebraically closed one:
///
/// 1. `L = L^(2) ∔ C ∔ B` with `B, C` abelian subalgebras and
///    `L^(1) = L^(2) ∔ C`;
/// 2. `B ∔ C` is a strongly solvable φ-free A-algebra (checked through its
///    diagonal form);
/// 3. `L^(2)` is a direct sum of minimal ideals of dimension `p`;
/// 4. per minimal ideal, the cyclic relations of [`CyclicIdealData`] with
///    `C = Z_C(A_i) ⊕ F c_i` and `B = Z_B(A_i) ⊕ F b_i`.
///
/// A positive conclusion certifies the A-property over any finite field.
pub fn cyclic_decomposition_check<F: Field>(
    l: &LieAlgebra<F>,
    cfg: &Config,
    reading: CyclicReading,
) -> Result<CyclicReport<F::Elem>> {
    let f = l.field();
    if !f.is_finite() {
        return Err(Error::MethodInapplicable("the cyclic decomposition check needs a finite field".into()));
    }
    if !l.is_solvable() {
        return Err(Error::NotSolvable);
    }
    if l.is_strongly_solvable() {
        return Err(Error::MethodInapplicable("the algebra is strongly solvable".into()));
    }
    if !structure::is_phi_free(l, Strategy::Auto, None, cfg)?.0 {
        return Err(Error::MethodInapplicable("the algebra is not φ-free".into()));
    }
    let p = f.characteristic() as usize;
    let mut report = CyclicReport {
        decomposition: None,
        conditions: [false; 4],
        ideals: Vec::new(),
        shared_b: None,
        reading,
        conclusion: false,
        closed_field_proxy: true,
    };

    let td = match decomp::triangular_decomposition(l, cfg) {
        Ok(td) => td,
        Err(e) if inapplicable(&e) => return Ok(report),
        Err(e) => return Err(e),
    };
    if td.derived_length != 3 {
        return Ok(report);
    }
    let (d2, c, b) = (td.parts[0].clone(), td.parts[1].clone(), td.parts[2].clone());
    report.conditions[0] = true;
    report.decomposition = Some([d2.clone(), c.clone(), b.clone()]);

    let bc = l.sum(&b, &c);
    if l.is_subalgebra(&bc) {
        let ind = l.induced(&bc)?;
        report.conditions[1] = diagonal_form(&ind.algebra)?.is_some();
    }

    let (minimal, _) = structure::minimal_ideals(l, MinimalIdealMethod::Auto, cfg)?;
    let mut acc = l.zero_space();
    let mut chosen = Vec::new();
    for m in minimal.iter().filter(|m| m.dim() == p && d2.contains_space(f, m)) {
        if l.intersect(&acc, m).is_zero() {
            acc = l.sum(&acc, m);
            chosen.push(m.clone());
        }
    }
    report.conditions[2] = acc == d2;

    let mut all = true;
    for a in &chosen {
        match cyclic_ideal_data(l, a, &b, &c, cfg)? {
            Some(data) => report.ideals.push(data),
            None => all = false,
        }
    }
    report.conditions[3] = all && !chosen.is_empty();
    if report.conditions[3] {
        report.shared_b = Some(shared_b_exists(l, &b, &chosen, &report.ideals)?);
    }
    let base = report.conditions.iter().all(|&x| x);
    report.conclusion = match reading {
        CyclicReading::PerIdeal => base,
        CyclicReading::Shared => base && report.shared_b == Some(true),
    };
    Ok(report)
}

/// Finds `c_i, b_i, a_i1..a_ip, λ_i` for one minimal ideal, or `None` if
/// they do not exist. `FieldTooSmall` if the only obstruction was a missing
/// eigenvalue.
fn cyclic_ideal_data<F: Field>(
    l: &LieAlgebra<F>,
    a: &Subspace<F::Elem>,
    b: &Subspace<F::Elem>,
    c: &Subspace<F::Elem>,
    cfg: &Config,
) -> Result<Option<CyclicIdealData<F::Elem>>> {
    let f = l.field();
    let p = f.characteristic() as usize;
    let elems = f.elements().ok_or(Error::InfiniteField)?;
    let cent = l.centralizer(a);
    let zc = l.intersect(c, &cent);
    let zb = l.intersect(b, &cent);
    if zc.dim() + 1 != c.dim() || zb.dim() + 1 != b.dim() {
        return Ok(None);
    }
    let c0 = linalg::complement(f, &zc, c)?.basis()[0].clone();
    let q = elems.len() as u128;
    let zc_count = q.checked_pow(zc.dim() as u32).unwrap_or(u128::MAX);
    if zc_count > cfg.budget.max_pairs as u128 {
        return Err(Error::BudgetExceeded(format!("{zc_count} shifts of c exceed the limit")));
    }
    let mut missing_eigen = false;
    for iz in 0..zc_count {
        let z = zc.vector(f, &oracle::nth_vector(&elems, zc.dim(), iz));
        let cc = linalg::add_vec(f, &c0, &z);
        // solve [cc, b] = cc over b ∈ B
        let rows: Vec<Vec<F::Elem>> = b.basis().iter().map(|bk| l.bracket(&cc, bk)).collect();
        let mat = Matrix::from_rows(l.dim(), rows)?;
        let part = match linalg::solve_left(f, &mat, &cc) {
            Ok(t) => t,
            Err(Error::NoSolution) => continue,
            Err(e) => return Err(e),
        };
        let hom = linalg::left_kernel(f, &mat);
        let hcount = q.checked_pow(hom.dim() as u32).unwrap_or(u128::MAX);
        if hcount > cfg.budget.max_pairs as u128 {
            return Err(Error::BudgetExceeded(format!("{hcount} choices of b exceed the limit")));
        }
        for ih in 0..hcount {
            let t = linalg::add_vec(f, &part, &hom.vector(f, &oracle::nth_vector(&elems, hom.dim(), ih)));
            let bb = linalg::combine(f, &t, b.basis(), l.dim());
            if zb.contains(f, &bb) {
                continue;
            }
            let mb = action_on(l, &bb, a);
            let roots = f.roots(&linalg::charpoly(f, &mb)).unwrap_or_default();
            if roots.is_empty() {
                missing_eigen = true;
                continue;
            }
            for s in roots {
                if let Some(data) = cyclic_basis(l, a, &cc, &bb, &s, p) {
                    return Ok(Some(data));
                }
            }
        }
    }
    if missing_eigen {
        return Err(Error::FieldTooSmall {
            reason: "ad b_i has no eigenvalue in the field on a minimal ideal".into(),
            suggested_degree: Some(p as u32),
        });
    }
    Ok(None)
}

/// Builds the cyclic basis from an eigenvector of `ad b` with eigenvalue
/// `s = λ + 1`, rescaling `c` so that `(ad c)^p` is the identity on `A`.
fn cyclic_basis<F: Field>(
    l: &LieAlgebra<F>,
    a: &Subspace<F::Elem>,
    cc: &[F::Elem],
    bb: &[F::Elem],
    s: &F::Elem,
    p: usize,
) -> Option<CyclicIdealData<F::Elem>> {
    let f = l.field();
    let mb = action_on(l, bb, a);
    let eig = linalg::left_kernel(f, &mb.sub(f, &Matrix::identity(f, a.dim()).scale(f, s)));
    let a1 = a.vector(f, eig.basis().first()?);
    let mut v = a1.clone();
    for _ in 0..p {
        v = l.bracket(&v, cc);
    }
    // v = κ a1 is required
    let lead = a1.iter().position(|x| !f.is_zero(x))?;
    let kappa = f.div(&v[lead], &a1[lead])?;
    if f.is_zero(&kappa) || v != linalg::scale_vec(f, &kappa, &a1) {
        return None;
    }
    let t = f.pth_root(&f.inv(&kappa)?)?;
    let c = linalg::scale_vec(f, &t, cc);
    let mut basis = vec![a1];
    for _ in 1..p {
        let next = l.bracket(basis.last().unwrap(), &c);
        basis.push(next);
    }
    let data = CyclicIdealData {
        c,
        b: bb.to_vec(),
        basis,
        lambda: f.sub(s, &f.one()),
    };
    check_cyclic_data(l, a, &data).then_some(data)
}

/// Re-checks the relations of [`CyclicIdealData`] on `A`.
pub fn check_cyclic_data<F: Field>(l: &LieAlgebra<F>, a: &Subspace<F::Elem>, d: &CyclicIdealData<F::Elem>) -> bool {
    let f = l.field();
    let p = d.basis.len();
    if l.span(d.basis.clone()) != *a || a.dim() != p {
        return false;
    }
    if l.bracket(&d.c, &d.b) != d.c {
        return false;
    }
    (0..p).all(|j| {
        let shift = l.bracket(&d.basis[j], &d.c) == d.basis[(j + 1) % p];
        let eig = f.add(&d.lambda, &f.from_i64(j as i64 + 1));
        shift && l.bracket(&d.basis[j], &d.b) == linalg::scale_vec(f, &eig, &d.basis[j])
    })
}

/// Is there one `b ∈ B` with `ad b = ad b_i` on every `A_i`?
fn shared_b_exists<F: Field>(
    l: &LieAlgebra<F>,
    b: &Subspace<F::Elem>,
    ideals: &[Subspace<F::Elem>],
    data: &[CyclicIdealData<F::Elem>],
) -> Result<bool> {
    let f = l.field();
    // Unknowns: coordinates t of b in B. Equations: Σ t_k [a, B_k] = [a, b_i].
    let k = b.dim();
    let mut cols: Vec<Vec<F::Elem>> = vec![Vec::new(); k];
    let mut rhs = Vec::new();
    for (a, d) in ideals.iter().zip(data) {
        for v in a.basis() {
            for (kk, bk) in b.basis().iter().enumerate() {
                cols[kk].extend(l.bracket(v, bk));
            }
            rhs.extend(l.bracket(v, &d.b));
        }
    }
    let mat = Matrix::from_rows(rhs.len(), cols)?;
    match linalg::solve_left(f, &mat, &rhs) {
        Ok(_) => Ok(true),
        Err(Error::NoSolution) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};
    use crate::generators::{self, CyclicDefect};

    fn gf(p: u64) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    fn check_cert<F: Field>(l: &LieAlgebra<F>, c: &ACertificate<F::Elem>) {
        if !c.verdict {
            assert!(oracle::replay_witness(l, c.witness.as_ref().unwrap()));
        }
    }

    #[test]
    fn basic_verdicts() {
        let cfg = Config::default();
        for p in [2, 3, 5] {
            let l = generators::cyclic_shift_algebra(gf(p)).unwrap();
            for m in [AMethod::OraclePairs, AMethod::Structural, AMethod::Auto] {
                let c = is_a(&l, m, &cfg).unwrap();
                assert!(c.verdict, "p={p} {m:?}");
            }
            let h = generators::heisenberg(gf(p)).unwrap();
            let c = is_a(&h, AMethod::Structural, &cfg).unwrap();
            assert!(!c.verdict);
            check_cert(&h, &c);
            let t = generators::two_dim_nonabelian(gf(p)).unwrap();
            assert!(is_a(&t, AMethod::OraclePairs, &cfg).unwrap().verdict);
        }
    }

    #[test]
    fn cyclic_shift_goes_through_the_cyclic_route() {
        let cfg = Config::default();
        let l = generators::cyclic_shift_algebra(gf(3)).unwrap();
        let c = is_a(&l, AMethod::Structural, &cfg).unwrap();
        assert_eq!(c.route, ARoute::CyclicDecomposition);
        assert!(c.closed_field_proxy);
    }

    #[test]
    fn rationals_use_certificates_or_witnesses() {
        let cfg = Config::default();
        let t = generators::two_dim_nonabelian(Rationals).unwrap();
        let c = is_a(&t, AMethod::Auto, &cfg).unwrap();
        assert!(c.verdict);
        assert_eq!(c.route, ARoute::InvertibleAction);
        let h = generators::heisenberg(Rationals).unwrap();
        let c = is_a(&h, AMethod::Auto, &cfg).unwrap();
        check_cert(&h, &c);
        assert!(matches!(is_a(&h, AMethod::OraclePairs, &cfg), Err(Error::InfiniteField)));
    }

    #[test]
    fn q_set_examples() {
        let cfg = Config::default();
        let a = generators::abelian(gf(3), 2).unwrap();
        let q = q_set(&a, &cfg).unwrap();
        assert_eq!(q.span, a.full());
        assert_eq!(q.elements.as_ref().unwrap().len(), 9);

        let t = generators::two_dim_nonabelian(gf(5)).unwrap();
        let q = q_set(&t, &cfg).unwrap();
        assert_eq!(q.span, t.span(vec![t.unit(0)]));
        assert_eq!(q.is_subspace, Some(true));
        assert!(q_set_matches_nilradical(&t, &q, &cfg).unwrap());

        let h = generators::heisenberg(gf(5)).unwrap();
        let q = q_set(&h, &cfg).unwrap();
        // every element of a 2-step nilpotent algebra squares to zero under ad
        assert_eq!(q.elements.as_ref().unwrap().len(), 125);
        assert_ne!(h.bracket(&h.unit(0), &h.unit(1)), h.zero_vector());

        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        let q = q_set(&l, &cfg).unwrap();
        assert_eq!(q_set_matches_nilradical(&l, &q, &cfg), Err(Error::CharacteristicExcluded(2)));
    }

    #[test]
    fn invertible_action_examples() {
        let cfg = Config::default();
        assert!(invertible_action_check(&generators::two_dim_nonabelian(gf(3)).unwrap(), &cfg).unwrap());
        assert!(invertible_action_check(&generators::abelian(gf(3), 3).unwrap(), &cfg).unwrap());
        let f = gf(3);
        let l = generators::diagonal_action_algebra(f, &[vec![1], vec![0]]).unwrap();
        assert!(!invertible_action_check(&l, &cfg).unwrap());
        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        assert_eq!(invertible_action_check(&l, &cfg), Err(Error::NotMetabelian));
        let q = Rationals;
        let one = q.one();
        let two = q.from_i64(2);
        let l = generators::diagonal_action_algebra(q.clone(), &[vec![one.clone(), two], vec![one.clone(), one]]).unwrap();
        assert!(!invertible_action_check(&l, &cfg).unwrap());
    }

    #[test]
    fn monolithic_criterion_examples() {
        let cfg = Config::default();
        let t = generators::two_dim_nonabelian(gf(5)).unwrap();
        assert_eq!(monolithic_criterion(&t, &cfg).unwrap(), (true, true));
        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        assert_eq!(monolithic_criterion(&l, &cfg).unwrap(), (false, false));
        let h = generators::heisenberg(gf(3)).unwrap();
        assert_eq!(monolithic_criterion(&h, &cfg).unwrap(), (false, false));
        let a = generators::abelian(gf(3), 2).unwrap();
        assert!(matches!(monolithic_criterion(&a, &cfg), Err(Error::NotMonolithic(_))));
    }

    #[test]
    fn monolithic_classification() {
        let cfg = Config::default();
        let f = gf(5);
        let t = generators::two_dim_nonabelian(f.clone()).unwrap();
        match classify_monolithic(&t, &cfg).unwrap() {
            MonolithicClass::Triangular { lambda, k, monolith_dim, .. } => {
                assert_eq!((lambda, k, monolith_dim), (f.one(), 1, 1));
            }
            other => panic!("{other:?}"),
        }
        for p in [2, 3] {
            let f = gf(p);
            let l = generators::cyclic_shift_algebra(f.clone()).unwrap();
            match classify_monolithic(&l, &cfg).unwrap() {
                MonolithicClass::Cyclic { b, n, lambda, mu, monolith_dim, .. } => {
                    assert_eq!(monolith_dim, p as usize);
                    assert_eq!(l.bracket(&n, &b), n);
                    assert!(!f.is_zero(&lambda) && !f.is_zero(&mu));
                }
                other => panic!("{other:?}"),
            }
        }
        let one = generators::abelian(gf(3), 1).unwrap();
        assert!(matches!(classify_monolithic(&one, &cfg), Err(Error::MethodInapplicable(_))));
        let h = generators::heisenberg(gf(3)).unwrap();
        assert_eq!(classify_monolithic(&h, &cfg), Err(Error::NotAAlgebra));
    }

    #[test]
    fn diagonal_form_reextracts_parameters() {
        let f = gf(5);
        let l = generators::diagonal_action_algebra(f.clone(), &[vec![1], vec![2]]).unwrap();
        let form = diagonal_form(&l).unwrap().unwrap();
        let mut got: Vec<u32> = form.lambda.iter().map(|r| r[0]).collect();
        got.sort();
        assert_eq!(got, vec![1, 2]);
        // Heisenberg is not of that form
        assert!(diagonal_form(&generators::heisenberg(f.clone()).unwrap()).unwrap().is_none());
        // a rotation over GF(3) has no eigenvalues in the field
        let rot = generators::extend_by_derivation(
            &generators::abelian(gf(3), 2).unwrap(),
            &Matrix::from_rows(2, vec![vec![0, 1], vec![2, 0]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(diagonal_form(&rot), Err(Error::FieldTooSmall { .. })));
    }

    #[test]
    fn cyclic_check_on_constructed_algebras() {
        let cfg = Config::default();
        let l = generators::cyclic_shift_algebra(gf(2)).unwrap();
        let rep = cyclic_decomposition_check(&l, &cfg, CyclicReading::PerIdeal).unwrap();
        assert_eq!(rep.conditions, [true; 4]);
        assert!(rep.conclusion);
        let a = &rep.decomposition.as_ref().unwrap()[0];
        assert!(check_cyclic_data(&l, a, &rep.ideals[0]));

        let f = gf(3);
        let l = generators::cyclic_module_algebra(f.clone(), 3, &[0, 1]).unwrap();
        let rep = cyclic_decomposition_check(&l, &cfg, CyclicReading::PerIdeal).unwrap();
        assert!(rep.conclusion, "{rep:?}");
        assert_eq!(rep.ideals.len(), 2);

        let h = generators::heisenberg(gf(2)).unwrap();
        assert!(matches!(
            cyclic_decomposition_check(&h, &cfg, CyclicReading::PerIdeal),
            Err(Error::MethodInapplicable(_))
        ));
    }

    #[test]
    fn cyclic_near_misses_agree_with_oracle() {
        let cfg = Config::default();
        let f = gf(2);
        for defect in [CyclicDefect::BrokenCycle, CyclicDefect::ExtraScalar, CyclicDefect::ExtraScalarOnFirst] {
            let l = generators::cyclic_module_variant(f.clone(), 2, &[0], Some(defect)).unwrap();
            let oracle_a = is_a(&l, AMethod::OraclePairs, &cfg).unwrap().verdict;
            match cyclic_decomposition_check(&l, &cfg, CyclicReading::PerIdeal) {
                Ok(rep) => assert_eq!(rep.conclusion, oracle_a, "{defect:?}"),
                Err(e) => println!("{defect:?}: {e}"),
            }
        }
    }

    #[test]
    fn structural_agrees_with_oracle_on_random_algebras() {
        let cfg = Config::default();
        for seed in 0..40 {
            for p in [2, 3] {
                let l = generators::random_solvable(seed, 4, gf(p)).unwrap();
                let o = is_a(&l, AMethod::OraclePairs, &cfg).unwrap();
                let s = is_a(&l, AMethod::Structural, &cfg).unwrap();
                assert_eq!(o.verdict, s.verdict, "seed {seed} p {p} route {:?}", s.route);
                check_cert(&l, &s);
            }
        }
    }
}
