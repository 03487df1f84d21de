//! Property tests for the algebraic invariants every module promises.

use num_traits::{One, Signed};
use proptest::prelude::*;

use solvlie::aclass::{self, AMethod};
use solvlie::config::Config;
use solvlie::decomp;
use solvlie::field::{Field, FiniteField, Rationals};
use solvlie::generators;
use solvlie::lie::LieAlgebra;
use solvlie::linalg::{self, Matrix, Subspace};
use solvlie::oracle;
use solvlie::structure::{self, MinimalIdealMethod, NilradicalMethod};

fn finite_fields() -> Vec<FiniteField> {
    vec![
        FiniteField::prime(2).unwrap(),
        FiniteField::prime(3).unwrap(),
        FiniteField::prime(5).unwrap(),
        FiniteField::extension(2, 2).unwrap(),
        FiniteField::extension(3, 2).unwrap(),
        FiniteField::extension(2, 3).unwrap(),
    ]
}

fn small_field() -> impl Strategy<Value = FiniteField> {
    (0usize..2).prop_map(|i| FiniteField::prime([2, 3][i]).unwrap())
}

fn random_algebra() -> impl Strategy<Value = LieAlgebra<FiniteField>> {
    (small_field(), any::<u64>(), 2usize..=5)
        .prop_map(|(f, seed, dim)| generators::random_solvable(seed, dim, f).unwrap())
}

fn random_a_algebra() -> impl Strategy<Value = LieAlgebra<FiniteField>> {
    (small_field(), any::<u64>()).prop_map(|(f, seed)| generators::random_a_candidate(seed, f).unwrap())
}

/// Independent Jacobi check straight from the bracket.
fn jacobi_holds<F: Field>(l: &LieAlgebra<F>) -> bool {
    let f = l.field();
    let n = l.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (l.unit(i), l.unit(j), l.unit(k));
                let a = l.bracket(&l.bracket(&x, &y), &z);
                let b = l.bracket(&l.bracket(&y, &z), &x);
                let c = l.bracket(&l.bracket(&z, &x), &y);
                let s: Vec<_> = (0..n).map(|t| f.add(&f.add(&a[t], &b[t]), &c[t])).collect();
                if !linalg::is_zero_vec(f, &s) || !linalg::is_zero_vec(f, &l.bracket(&x, &x)) {
                    return false;
                }
            }
        }
    }
    true
}

fn random_space(f: &FiniteField, n: usize, rows: Vec<Vec<u32>>) -> Subspace<u32> {
    let q = f.order().unwrap() as u32;
    Subspace::span(f, n, rows.into_iter().map(|r| r.into_iter().map(|c| c % q).collect()).collect())
}

fn vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..9, n), 0..=k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_field_axioms(fi in 0usize..6, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = &finite_fields()[fi];
        let q = f.order().unwrap() as u32;
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
        let p = f.characteristic();
        prop_assert_eq!(f.pow(&f.add(&a, &b), p), f.add(&f.pow(&a, p), &f.pow(&b, p)));
        prop_assert_eq!(f.pth_root(&f.pow(&a, p)), Some(a));
    }

    #[test]
    fn rationals_stay_normalized(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let q = Rationals;
        let x = q.div(&q.from_i64(a), &q.from_i64(b)).unwrap();
        let y = q.div(&q.from_i64(c), &q.from_i64(d)).unwrap();
        for v in [q.add(&x, &y), q.mul(&x, &y), q.sub(&x, &y)] {
            prop_assert!(v.denom().is_positive());
            let g = num_integer::Integer::gcd(v.numer(), v.denom());
            prop_assert!(g.is_one() || num_traits::Zero::is_zero(v.numer()));
            let back = q.decode(&q.encode(&v)).unwrap();
            prop_assert_eq!(back, v);
        }
        if !q.is_zero(&x) {
            prop_assert!(q.is_one(&q.mul(&x, &q.inv(&x).unwrap())));
        }
    }

    #[test]
    fn grassmann_law_and_canonical_form(fi in 0usize..3, u in vectors(5, 4), v in vectors(5, 4)) {
        let f = &finite_fields()[fi];
        let (u, v) = (random_space(f, 5, u), random_space(f, 5, v));
        let s = linalg::sum(f, &u, &v).unwrap();
        let i = linalg::intersect(f, &u, &v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains_space(f, &u) && s.contains_space(f, &v));
        prop_assert!(u.contains_space(f, &i) && v.contains_space(f, &i));
        // Re-spanning a canonical basis reproduces it exactly.
        prop_assert_eq!(Subspace::span(f, 5, s.basis().to_vec()), s);
    }

    #[test]
    fn membership_matches_solving(fi in 0usize..3, u in vectors(4, 3), w in prop::collection::vec(0u32..9, 4)) {
        let f = &finite_fields()[fi];
        let q = f.order().unwrap() as u32;
        let u = random_space(f, 4, u);
        let w: Vec<u32> = w.into_iter().map(|c| c % q).collect();
        let solvable = u.dim() > 0 && linalg::solve_left(f, &u.matrix(), &w).is_ok();
        let zero = linalg::is_zero_vec(f, &w);
        prop_assert_eq!(u.contains(f, &w), solvable || zero);
    }

    #[test]
    fn generated_and_quotient_algebras_satisfy_jacobi(l in random_algebra()) {
        prop_assert!(jacobi_holds(&l));
        let terms = l.derived_series().terms;
        for w in terms.windows(2) {
            prop_assert_eq!(&w[1], &l.bracket_spaces(&w[0], &w[0]));
        }
        for ideal in &terms {
            let q = l.quotient(ideal).unwrap();
            prop_assert!(jacobi_holds(&q.algebra));
            prop_assert_eq!(q.algebra.dim() + ideal.dim(), l.dim());
        }
    }

    #[test]
    fn nilpotency_of_subalgebras_matches_induced_algebra(l in random_algebra()) {
        let cfg = Config::default();
        for s in oracle::subalgebras(&l, &cfg).unwrap() {
            let induced = l.induced(&s).unwrap();
            prop_assert_eq!(l.is_nilpotent_space(&s), induced.algebra.is_nilpotent());
        }
    }

    #[test]
    fn fitting_decomposition_is_direct(l in random_algebra(), idx in any::<prop::sample::Index>()) {
        let x = l.unit(idx.index(l.dim()));
        let fp = decomp::fitting_single(&l, &x);
        prop_assert_eq!(fp.l0.dim() + fp.l1.dim(), l.dim());
        prop_assert!(l.intersect(&fp.l0, &fp.l1).is_zero());
        let ad = l.ad(&x);
        for s in [&fp.l0, &fp.l1] {
            for v in s.basis() {
                prop_assert!(s.contains(l.field(), &ad.apply(l.field(), v)));
            }
        }
        // The stable image is reproduced by one more application of ad x.
        let image = l.span(fp.l1.basis().iter().map(|v| ad.apply(l.field(), v)).collect());
        prop_assert_eq!(image, fp.l1);
    }

    #[test]
    fn structure_containments(l in random_algebra()) {
        let cfg = Config::default();
        let n = structure::nilradical(&l, NilradicalMethod::Oracle, &cfg).unwrap().0;
        let f = l.field();
        prop_assert!(n.contains_space(f, &l.center()));
        prop_assert!(n.contains_space(f, &l.intersect(&l.centralizer(&n), &l.full())));
        let (minimal, _) = structure::minimal_ideals(&l, MinimalIdealMethod::Auto, &cfg).unwrap();
        prop_assert!(n.contains_space(f, &structure::abelian_socle(&l, &minimal)));
        prop_assert_eq!(structure::monolith(&minimal).is_ok(), minimal.len() == 1);
        let ideals = oracle::ideals(&l, &cfg).unwrap();
        for m in &minimal {
            prop_assert!(l.is_ideal(m) && !m.is_zero());
            let proper = ideals.iter().any(|k| !k.is_zero() && k.dim() < m.dim() && m.contains_space(f, k));
            prop_assert!(!proper);
        }
    }

    #[test]
    fn negative_certificates_replay(l in random_algebra()) {
        let cfg = Config::default();
        let cert = aclass::is_a(&l, AMethod::Auto, &cfg).unwrap();
        prop_assert_eq!(cert.verdict, cert.witness.is_none());
        if let Some(w) = &cert.witness {
            prop_assert!(oracle::replay_witness(&l, w));
            prop_assert!(!linalg::is_zero_vec(l.field(), &l.bracket(&w.x, &w.y)));
            let s = l.generated_subalgebra(&[w.x.clone(), w.y.clone()]);
            prop_assert!(l.is_nilpotent_space(&s));
        }
    }

    #[test]
    fn a_algebras_have_triangular_decompositions(l in random_a_algebra()) {
        let cfg = Config::default();
        prop_assert!(aclass::is_a(&l, AMethod::OraclePairs, &cfg).unwrap().verdict);
        let lower = l.lower_nilpotent_series().terms;
        let derived = l.derived_series().terms;
        prop_assert_eq!(lower, derived);
        let td = decomp::triangular_decomposition(&l, &cfg).unwrap();
        prop_assert_eq!(td.parts.iter().map(Subspace::dim).sum::<usize>(), l.dim());
        decomp::check_triangular(&l, &td).unwrap();
        for k in oracle::ideals(&l, &cfg).unwrap() {
            let pieces = decomp::ideal_decomposition(&l, &k, &td).unwrap();
            let rebuilt = pieces.iter().fold(l.zero_space(), |acc, p| l.sum(&acc, p));
            prop_assert_eq!(rebuilt, k);
        }
    }

    #[test]
    fn cartan_subalgebras_are_nilpotent_and_self_normalizing(l in random_algebra()) {
        let cfg = Config::default();
        let h = decomp::cartan_subalgebra(&l, &cfg).unwrap();
        prop_assert!(l.is_subalgebra(&h) && l.is_nilpotent_space(&h));
        prop_assert_eq!(l.normalizer(&h), h.clone());
        let a = aclass::is_a(&l, AMethod::OraclePairs, &cfg).unwrap().verdict;
        if a && l.is_strongly_solvable() {
            let d = l.derived_algebra();
            prop_assert!(l.intersect(&h, &d).is_zero());
            prop_assert_eq!(h.dim() + d.dim(), l.dim());
        }
    }

    #[test]
    fn generation_is_a_pure_function_of_the_seed(seed in any::<u64>(), dim in 2usize..=6) {
        let f = FiniteField::prime(3).unwrap();
        let a = generators::random_solvable(seed, dim, f.clone()).unwrap();
        let b = generators::random_solvable(seed, dim, f).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
    }
}

#[test]
fn subspace_counts_match_gaussian_binomials() {
    let cfg = Config::default();
    for (p, n) in [(2u64, 3usize), (2, 4), (3, 3)] {
        let f = FiniteField::prime(p).unwrap();
        let all = oracle::subspaces_where(&f, n, &cfg, |_| true).unwrap();
        assert_eq!(all.len() as u128, oracle::subspace_count(p, n));
        for k in 0..=n {
            let of_dim = all.iter().filter(|s| s.dim() == k).count() as u128;
            assert_eq!(of_dim, oracle::gaussian_binomial(p, n, k));
        }
    }
}

#[test]
fn q_set_is_the_nilradical_for_a_algebras_in_characteristic_five() {
    let cfg = Config::default();
    let f = FiniteField::prime(5).unwrap();
    for seed in 0..10 {
        let l = generators::random_a_candidate(seed, f.clone()).unwrap();
        let q = aclass::q_set(&l, &cfg).unwrap();
        let n = oracle::nilradical(&l, &cfg).unwrap();
        assert_eq!(q.span, n, "seed {seed}");
        assert_eq!(q.is_subspace, Some(true), "seed {seed}");
    }
}

#[test]
fn cyclic_shift_brackets_come_from_the_defining_matrices() {
    // e is the cyclic shift and f = diag(0, .., p-1) on F^p, [e, f] = e.
    for p in [2u64, 3, 5] {
        let fld = FiniteField::prime(p).unwrap();
        let l = generators::cyclic_shift_algebra(fld.clone()).unwrap();
        let pu = p as usize;
        let shift = Matrix::from_rows(pu, (0..pu).map(|i| (0..pu).map(|j| u32::from(j == (i + 1) % pu)).collect()).collect()).unwrap();
        let diag = Matrix::from_rows(pu, (0..pu).map(|i| (0..pu).map(|j| if i == j { i as u32 } else { 0 }).collect()).collect()).unwrap();
        for i in 0..pu {
            let x: Vec<u32> = (0..pu).map(|j| u32::from(i == j)).collect();
            let pad = |v: Vec<u32>| {
                let mut full = vec![0u32, 0];
                full.extend(v);
                full
            };
            assert_eq!(l.bracket(&l.unit(2 + i), &l.unit(0)), pad(shift.apply(&fld, &x)));
            assert_eq!(l.bracket(&l.unit(2 + i), &l.unit(1)), pad(diag.apply(&fld, &x)));
        }
        assert_eq!(l.bracket(&l.unit(0), &l.unit(1)), l.unit(0));
    }
}
