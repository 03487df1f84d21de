//! Named algebras and seeded random corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};
use crate::lie::LieAlgebra;
use crate::linalg::{self, kernel, zero_vec, Matrix, Subspace};

fn sparse<F: Field>(f: &F, n: usize, terms: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    let mut v = zero_vec(f, n);
    for (k, c) in terms {
        v[*k] = f.add(&v[*k], c);
    }
    v
}

fn names(prefix: &str, n: usize, from: usize) -> Vec<String> {
    (from..from + n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn abelian<F: Field>(f: F, n: usize) -> Result<LieAlgebra<F>> {
    LieAlgebra::new(f, n, Vec::new())
}

/// `[b1, b2] = b1`.
pub fn two_dim_nonabelian<F: Field>(f: F) -> Result<LieAlgebra<F>> {
    let one = f.one();
    let v = sparse(&f, 2, &[(0, one)]);
    LieAlgebra::new(f, 2, vec![(0, 1, v)])?.with_names(vec!["b1".into(), "b2".into()])
}

/// `[x, y] = z` with `z` central.
pub fn heisenberg<F: Field>(f: F) -> Result<LieAlgebra<F>> {
    let one = f.one();
    let v = sparse(&f, 3, &[(2, one)]);
    LieAlgebra::new(f, 3, vec![(0, 1, v)])?.with_names(vec!["x".into(), "y".into(), "z".into()])
}

/// `Fe + Ff + F^p` on the basis `(e, f, x_1, ..., x_p)`: `e` acts on `F^p`
/// as the cyclic shift, `f` as `diag(0, 1, ..., p-1)`, and `[e, f] = e`.
pub fn cyclic_shift_algebra<F: Field>(f: F) -> Result<LieAlgebra<F>> {
    let p = f.characteristic();
    if p == 0 {
        return Err(Error::CharacteristicZero);
    }
    let p = p as usize;
    let n = p + 2;
    let one = f.one();
    let mut entries = vec![(0, 1, sparse(&f, n, &[(0, one.clone())]))];
    for i in 0..p {
        let xi = 2 + i;
        let next = 2 + (i + 1) % p;
        entries.push((xi, 0, sparse(&f, n, &[(next, one.clone())])));
        entries.push((xi, 1, sparse(&f, n, &[(xi, f.from_i64(i as i64))])));
    }
    let mut nm = vec!["e".to_string(), "f".to_string()];
    nm.extend(names("x", p, 1));
    LieAlgebra::new(f, n, entries)?.with_names(nm)
}

/// `sum F a_i + sum F b_j` with `[a_i, b_j] = lambda[i][j] a_i`.
pub fn diagonal_action_algebra<F: Field>(f: F, lambda: &[Vec<F::Elem>]) -> Result<LieAlgebra<F>> {
    let m = lambda.len();
    let k = lambda.first().map_or(0, Vec::len);
    if lambda.iter().any(|r| r.len() != k) {
        return Err(Error::Shape("ragged parameter matrix".into()));
    }
    let n = m + k;
    let mut entries = Vec::new();
    for (i, row) in lambda.iter().enumerate() {
        for (j, l) in row.iter().enumerate() {
            if !f.is_zero(l) {
                entries.push((i, m + j, sparse(&f, n, &[(i, l.clone())])));
            }
        }
    }
    let mut nm = names("a", m, 1);
    nm.extend(names("b", k, 1));
    LieAlgebra::new(f, n, entries)?.with_names(nm)
}

/// Which relation of the cyclic construction to break, for near-miss
/// controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicDefect {
    /// `[a_ip, c_i] = 0` instead of `a_i1`.
    BrokenCycle,
    /// An extra element of `B` acting as the identity on every `A_i`.
    ExtraScalar,
    /// An extra element of `B` acting as the identity on `A_1` only.
    ExtraScalarOnFirst,
    /// A Heisenberg algebra added as a direct summand.
    HeisenbergSummand,
}

/// `(A_1 + ... + A_n) + C + B` on the basis `a_11..a_np, c_1..c_n, b_1..b_n`
/// with `[c_i, b_i] = c_i`, `[a_ij, c_i] = a_i(j+1)` (indices mod p) and
/// `[a_ij, b_i] = (lambda_i + j) a_ij`.
pub fn cyclic_module_algebra<F: Field>(f: F, p: u64, lambdas: &[F::Elem]) -> Result<LieAlgebra<F>> {
    cyclic_module_variant(f, p, lambdas, None)
}

pub fn cyclic_module_variant<F: Field>(
    f: F,
    p: u64,
    lambdas: &[F::Elem],
    defect: Option<CyclicDefect>,
) -> Result<LieAlgebra<F>> {
    if f.characteristic() != p {
        return Err(Error::CharacteristicMismatch {
            expected: p,
            found: f.characteristic(),
        });
    }
    let pu = p as usize;
    let m = lambdas.len();
    let extra = match defect {
        Some(CyclicDefect::ExtraScalar | CyclicDefect::ExtraScalarOnFirst) => 1,
        Some(CyclicDefect::HeisenbergSummand) => 3,
        _ => 0,
    };
    let n = m * pu + 2 * m + extra;
    let a = |i: usize, j: usize| i * pu + (j % pu);
    let c = |i: usize| m * pu + i;
    let b = |i: usize| m * pu + m + i;
    let one = f.one();
    let mut entries = Vec::new();
    for (i, lam) in lambdas.iter().enumerate() {
        entries.push((c(i), b(i), sparse(&f, n, &[(c(i), one.clone())])));
        for j in 0..pu {
            let broken = defect == Some(CyclicDefect::BrokenCycle) && j == pu - 1;
            if !broken {
                entries.push((a(i, j), c(i), sparse(&f, n, &[(a(i, j + 1), one.clone())])));
            }
            // j is 0-based here, the relation uses 1-based j.
            let eig = f.add(lam, &f.from_i64(j as i64 + 1));
            entries.push((a(i, j), b(i), sparse(&f, n, &[(a(i, j), eig)])));
        }
    }
    let base = m * pu + 2 * m;
    match defect {
        Some(d @ (CyclicDefect::ExtraScalar | CyclicDefect::ExtraScalarOnFirst)) => {
            let reach = if d == CyclicDefect::ExtraScalar { m } else { m.min(1) };
            for i in 0..reach {
                for j in 0..pu {
                    entries.push((a(i, j), base, sparse(&f, n, &[(a(i, j), one.clone())])));
                }
            }
        }
        Some(CyclicDefect::HeisenbergSummand) => {
            entries.push((base, base + 1, sparse(&f, n, &[(base + 2, one.clone())])));
        }
        _ => {}
    }
    let mut nm = Vec::new();
    for i in 1..=m {
        nm.extend((1..=pu).map(|j| format!("a{i}_{j}")));
    }
    nm.extend(names("c", m, 1));
    nm.extend(names("b", m, 1));
    match defect {
        Some(CyclicDefect::ExtraScalar | CyclicDefect::ExtraScalarOnFirst) => nm.push("b0".into()),
        Some(CyclicDefect::HeisenbergSummand) => nm.extend(["hx", "hy", "hz"].map(String::from)),
        _ => {}
    }
    LieAlgebra::new(f, n, entries)?.with_names(nm)
}

/// Basis of the derivation algebra, each derivation as an `n x n` matrix in
/// the right-action convention (`x -> x D`).
pub fn derivations<F: Field>(l: &LieAlgebra<F>) -> Vec<Matrix<F::Elem>> {
    let f = l.field();
    let n = l.dim();
    // Unknowns D[r][s] at index r*n + s. Equation for each i<j and output k:
    // ([b_i,b_j] D)_k - ([b_i D, b_j])_k - ([b_i, b_j D])_k = 0.
    let mut eqs: Vec<Vec<F::Elem>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let cij = l.structure_constant(i, j);
            for k in 0..n {
                let mut row = zero_vec(f, n * n);
                for r in 0..n {
                    // sum_r c_ij^r D[r][k]
                    if !f.is_zero(&cij[r]) {
                        row[r * n + k] = f.add(&row[r * n + k], &cij[r]);
                    }
                    // [b_i D, b_j]_k = sum_r D[i][r] c_rj^k
                    let crj = &l.structure_constant(r, j)[k];
                    if !f.is_zero(crj) {
                        row[i * n + r] = f.sub(&row[i * n + r], crj);
                    }
                    // [b_i, b_j D]_k = sum_r D[j][r] c_ir^k
                    let cir = &l.structure_constant(i, r)[k];
                    if !f.is_zero(cir) {
                        row[j * n + r] = f.sub(&row[j * n + r], cir);
                    }
                }
                eqs.push(row);
            }
        }
    }
    let sol = if eqs.is_empty() {
        Subspace::full(f, n * n)
    } else {
        kernel(f, &Matrix::from_rows(n * n, eqs).expect("uniform rows"))
    };
    sol.basis()
        .iter()
        .map(|v| Matrix::from_rows(n, v.chunks(n).map(<[F::Elem]>::to_vec).collect()).expect("square"))
        .collect()
}

/// `L + F d` with `[x, d] = x D` for a derivation `D` of `L`.
pub fn extend_by_derivation<F: Field>(l: &LieAlgebra<F>, d: &Matrix<F::Elem>) -> Result<LieAlgebra<F>> {
    let f = l.field().clone();
    let n = l.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = l.structure_constant(i, j).to_vec();
            v.push(f.zero());
            entries.push((i, j, v));
        }
        let mut v = d.row(i).to_vec();
        v.push(f.zero());
        entries.push((i, n, v));
    }
    let mut nm = l.names().to_vec();
    nm.push(format!("d{n}"));
    LieAlgebra::new(f, n + 1, entries)?.with_names(nm)
}

fn random_invertible<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Matrix<F::Elem> {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| f.random(rng)).collect()).collect();
        let m = Matrix::from_rows(n, rows).expect("square");
        if m.rank(f) == n {
            return m;
        }
    }
}

/// Seeded random solvable algebra of dimension `2..=max_dim`: a small
/// abelian algebra extended repeatedly by random derivations, then written
/// in a random basis.
pub fn random_solvable<F: Field>(seed: u64, max_dim: usize, f: F) -> Result<LieAlgebra<F>> {
    if max_dim < 1 {
        return Err(Error::GenerationFailed("dimension budget must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.gen_range(2.max(1).min(max_dim)..=max_dim);
    let start = rng.gen_range(1..=target.min(3));
    let mut l = abelian(f.clone(), start)?;
    while l.dim() < target {
        let ders = derivations(&l);
        let coeffs: Vec<F::Elem> = (0..ders.len()).map(|_| f.random(&mut rng)).collect();
        let mut d = Matrix::zero(&f, l.dim(), l.dim());
        for (c, m) in coeffs.iter().zip(&ders) {
            d = d.add(&f, &m.scale(&f, c));
        }
        l = extend_by_derivation(&l, &d)?;
    }
    let basis = random_invertible(&f, l.dim(), &mut rng);
    l.change_basis(&basis)
}

/// Seeded algebra `V + B` with `V = L^2` abelian and every nonzero `b` in
/// the abelian `B` acting invertibly on `V`. Over a prime field `V` is an
/// extension field and `B` acts by multiplication with independent field
/// elements; otherwise `B` is one-dimensional acting by a random invertible
/// matrix.
pub fn random_a_candidate(seed: u64, f: FiniteField) -> Result<LieAlgebra<FiniteField>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = f.p();
    let ops: Vec<Matrix<u32>> = if f.degree() == 1 {
        let max_m: u32 = if p <= 3 { 3 } else { 2 };
        let m = rng.gen_range(1..=max_m);
        let ext = FiniteField::extension(p, m)?;
        let r = rng.gen_range(1..=m as usize);
        // Pick r field elements independent over GF(p).
        let mut chosen: Vec<u32> = Vec::new();
        let mut span = Subspace::zero(m as usize);
        let mut tries = 0;
        while chosen.len() < r {
            tries += 1;
            if tries > 1000 {
                return Err(Error::GenerationFailed("no independent multipliers found".into()));
            }
            let beta = ext.random(&mut rng);
            let coords: Vec<u32> = ext.coefficients(beta).iter().map(|&c| c as u32).collect();
            if !span.contains(&f, &coords) {
                span = span.extend(&f, coords);
                chosen.push(beta);
            }
        }
        chosen
            .iter()
            .map(|beta| {
                let rows = (0..m as usize)
                    .map(|i| {
                        let basis_elem = ext.from_coefficients(&linalg::unit_vec(&f, m as usize, i).iter().map(|&c| c as u64).collect::<Vec<_>>()).expect("unit");
                        ext.coefficients(ext.mul(&basis_elem, beta)).iter().map(|&c| c as u32).collect()
                    })
                    .collect();
                Matrix::from_rows(m as usize, rows).expect("square")
            })
            .collect()
    } else {
        let m = rng.gen_range(1..=2);
        vec![random_invertible(&f, m, &mut rng)]
    };
    let m = ops[0].ncols();
    let r = ops.len();
    let n = m + r;
    let mut entries = Vec::new();
    for (k, op) in ops.iter().enumerate() {
        for i in 0..m {
            let mut v = op.row(i).to_vec();
            v.extend(zero_vec(&f, r));
            entries.push((i, m + k, v));
        }
    }
    let mut nm = names("v", m, 1);
    nm.extend(names("b", r, 1));
    let l = LieAlgebra::new(f.clone(), n, entries)?.with_names(nm)?;
    let basis = random_invertible(&f, n, &mut rng);
    l.change_basis(&basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn gf(p: u64) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    /// The defining matrices of the example, multiplied out.
    #[test]
    fn cyclic_shift_constants_from_matrices() {
        for p in [2u64, 3, 5] {
            let f = gf(p);
            let pu = p as usize;
            let e = Matrix::from_rows(pu, (0..pu).map(|i| linalg::unit_vec(&f, pu, (i + 1) % pu)).collect()).unwrap();
            let fm = Matrix::from_rows(
                pu,
                (0..pu)
                    .map(|i| {
                        let mut r = zero_vec(&f, pu);
                        r[i] = f.from_i64(i as i64);
                        r
                    })
                    .collect(),
            )
            .unwrap();
            let comm = linalg::matmul(&f, &e, &fm).sub(&f, &linalg::matmul(&f, &fm, &e));
            assert_eq!(comm, e, "ef - fe = e for p = {p}");
            let l = cyclic_shift_algebra(f.clone()).unwrap();
            // [x_i, e] = x_i e and [x_i, f] = x_i f as row vectors.
            for i in 0..pu {
                let xi = l.unit(2 + i);
                let br_e = l.bracket(&xi, &l.unit(0));
                let br_f = l.bracket(&xi, &l.unit(1));
                assert_eq!(&br_e[2..], e.row(i));
                assert_eq!(&br_f[2..], fm.row(i));
            }
            assert_eq!(l.bracket(&l.unit(0), &l.unit(1)), l.unit(0));
        }
        assert_eq!(cyclic_shift_algebra(Rationals).unwrap_err(), Error::CharacteristicZero);
    }

    #[test]
    fn cyclic_shift_charpoly() {
        // det(x - (alpha e + beta f)) on F^p equals x^p - beta^(p-1) x - alpha^p.
        for p in [2u64, 3] {
            let f = FiniteField::extension(p, 2).unwrap();
            let l = cyclic_shift_algebra(f.clone()).unwrap();
            let pu = p as usize;
            for alpha in f.elements().unwrap() {
                for beta in f.elements().unwrap() {
                    let mut x = l.zero_vector();
                    x[0] = alpha;
                    x[1] = beta;
                    let ad = l.ad(&x);
                    let block = Matrix::from_rows(pu, (0..pu).map(|i| ad.row(2 + i)[2..].to_vec()).collect()).unwrap();
                    let cp = linalg::charpoly(&f, &block);
                    let mut want = vec![f.zero(); pu + 1];
                    want[pu] = f.one();
                    want[1] = f.add(&want[1], &f.neg(&f.pow(&beta, p - 1)));
                    want[0] = f.add(&want[0], &f.neg(&f.pow(&alpha, p)));
                    assert_eq!(cp, want, "p={p}");
                }
            }
        }
    }

    #[test]
    fn named_algebras() {
        let l = diagonal_action_algebra(gf(5), &[vec![1], vec![2]]).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.is_metabelian());
        let one = diagonal_action_algebra(gf(5), &[vec![1]]).unwrap();
        assert_eq!(one.structure_constant(0, 1), two_dim_nonabelian(gf(5)).unwrap().structure_constant(0, 1));
        assert!(diagonal_action_algebra(gf(5), &[vec![0, 0]]).unwrap().is_abelian());
        for (p, n) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let lambdas: Vec<u32> = (0..n).map(|i| i as u32 % p as u32).collect();
            let l = cyclic_module_algebra(gf(p), p, &lambdas).unwrap();
            assert_eq!(l.dim(), n * (p as usize + 2));
            assert_eq!(l.derived_length(), Some(3));
            for d in [
                CyclicDefect::BrokenCycle,
                CyclicDefect::ExtraScalar,
                CyclicDefect::ExtraScalarOnFirst,
                CyclicDefect::HeisenbergSummand,
            ] {
                assert!(cyclic_module_variant(gf(p), p, &lambdas, Some(d)).is_ok());
            }
        }
        assert!(matches!(
            cyclic_module_algebra(gf(3), 2, &[0]),
            Err(Error::CharacteristicMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn random_generators_are_deterministic_and_valid() {
        for seed in 0..30 {
            let a = random_solvable(seed, 5, gf(2)).unwrap();
            assert!(a.is_solvable());
            assert!(a.dim() <= 5);
            assert_eq!(a, random_solvable(seed, 5, gf(2)).unwrap());
            let b = random_a_candidate(seed, gf(3)).unwrap();
            assert!(b.is_metabelian());
            assert_eq!(b, random_a_candidate(seed, gf(3)).unwrap());
        }
        assert!(random_solvable(7, 5, gf(2)).unwrap().is_solvable());
    }

    #[test]
    fn derivations_of_two_dim() {
        // Der of [b1,b2]=b1 is 2-dimensional (inner derivations).
        assert_eq!(derivations(&two_dim_nonabelian(gf(5)).unwrap()).len(), 2);
        assert_eq!(derivations(&abelian(gf(2), 2).unwrap()).len(), 4);
    }
}
