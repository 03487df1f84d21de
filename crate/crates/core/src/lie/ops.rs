use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};
use crate::linalg::{self, is_zero_vec, kernel, left_kernel, matmul, Matrix, Subspace};

/// A subalgebra presented as an algebra in its own right, with the map
/// back into the ambient algebra.
#[derive(Clone, Debug)]
pub struct Induced<F: Field> {
    pub algebra: LieAlgebra<F>,
    /// Rows are the images of the new basis vectors.
    pub embedding: Matrix<F::Elem>,
    pub space: Subspace<F::Elem>,
}

impl<F: Field> Induced<F> {
    pub fn embed(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.embedding.apply(self.algebra.field(), v)
    }

    pub fn embed_space(&self, u: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let f = self.algebra.field();
        Subspace::span(f, self.embedding.ncols(), u.basis().iter().map(|v| self.embed(v)).collect())
    }

    /// Coordinates of an ambient vector lying in the subalgebra.
    pub fn restrict(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.space.coords(v)
    }

    pub fn restrict_space(&self, u: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let f = self.algebra.field();
        Subspace::span(f, self.algebra.dim(), u.basis().iter().map(|v| self.restrict(v)).collect())
    }
}

/// `L / I` on the basis given by a deterministic complement of `I`.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub algebra: LieAlgebra<F>,
    pub ideal: Subspace<F::Elem>,
    /// Rows are the coset representatives of the quotient basis.
    pub lift: Matrix<F::Elem>,
    /// `n x m`; `v * projection` gives the quotient coordinates of `v`.
    pub projection: Matrix<F::Elem>,
}

impl<F: Field> Quotient<F> {
    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.projection.apply(self.algebra.field(), v)
    }

    pub fn lift_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.lift.apply(self.algebra.field(), v)
    }

    pub fn project_space(&self, u: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let f = self.algebra.field();
        Subspace::span(f, self.algebra.dim(), u.basis().iter().map(|v| self.project(v)).collect())
    }

    /// Full preimage of a subspace of the quotient.
    pub fn preimage(&self, u: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let f = self.algebra.field();
        let n = self.lift.ncols();
        let mut rows: Vec<_> = u.basis().iter().map(|v| self.lift_vec(v)).collect();
        rows.extend(self.ideal.basis().iter().cloned());
        Subspace::span(f, n, rows)
    }
}

impl<F: Field> LieAlgebra<F> {
    /// `Z_L(U) = {x : [x, U] = 0}`, one stacked linear system.
    pub fn centralizer(&self, u: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let f = self.field();
        let n = self.dim();
        if u.is_zero() {
            return self.full();
        }
        let mut m = Matrix::zero(f, n, 0);
        for b in u.basis() {
            m = m.augment(&self.ad(b)).expect("same row count");
        }
        left_kernel(f, &m)
    }

    pub fn center(&self) -> Subspace<F::Elem> {
        self.centralizer(&self.full())
    }

    /// `{x : [x, U] ⊆ U}`.
    pub fn normalizer(&self, u: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let f = self.field();
        let n = self.dim();
        if u.is_zero() || u.is_full() {
            return self.full();
        }
        // Columns of `ann` test membership: v in U iff v * ann = 0.
        let ann = kernel(f, &u.matrix()).matrix().transpose();
        let mut m = Matrix::zero(f, n, 0);
        for b in u.basis() {
            m = m.augment(&matmul(f, &self.ad(b), &ann)).expect("same row count");
        }
        left_kernel(f, &m)
    }

    /// Smallest subalgebra containing the given vectors.
    pub fn generated_subalgebra(&self, gens: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
        let f = self.field();
        let mut space = self.span(gens.to_vec());
        let mut frontier: Vec<Vec<F::Elem>> = space.basis().to_vec();
        while !frontier.is_empty() {
            let basis = space.basis().to_vec();
            let mut next = Vec::new();
            for x in &frontier {
                for y in &basis {
                    let z = self.bracket(x, y);
                    if !space.contains(f, &z) {
                        space = space.extend(f, z.clone());
                        next.push(z);
                    }
                }
            }
            frontier = next;
        }
        space
    }

    /// Smallest ideal containing the given vectors.
    pub fn generated_ideal(&self, gens: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
        let f = self.field();
        let mut space = self.span(gens.to_vec());
        let mut frontier: Vec<Vec<F::Elem>> = space.basis().to_vec();
        while let Some(x) = frontier.pop() {
            for r in self.ad(&x).into_rows() {
                if !space.contains(f, &r) {
                    space = space.extend(f, r.clone());
                    frontier.push(r);
                }
            }
        }
        space
    }

    /// The subalgebra `U` as an algebra on its RREF basis.
    pub fn induced(&self, u: &Subspace<F::Elem>) -> Result<Induced<F>> {
        if !self.is_subalgebra(u) {
            return Err(Error::NotClosed("subspace is not a subalgebra".into()));
        }
        let f = self.field().clone();
        let b = u.basis();
        let k = b.len();
        let mut table = Vec::with_capacity(k * k);
        for x in b {
            for y in b {
                table.push(u.coords(&self.bracket(x, y)));
            }
        }
        let algebra = LieAlgebra::from_full_table(f, k, table)?;
        Ok(Induced {
            algebra,
            embedding: u.matrix(),
            space: u.clone(),
        })
    }

    /// `L / I` on the complement of `I` chosen greedily from the standard basis.
    pub fn quotient(&self, ideal: &Subspace<F::Elem>) -> Result<Quotient<F>> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotClosed("subspace is not an ideal".into()));
        }
        let f = self.field().clone();
        let n = self.dim();
        let comp = linalg::complement(&f, ideal, &self.full())?;
        let stacked = ideal.matrix().stack(&comp.matrix())?;
        let inv = linalg::inverse(&f, &stacked)?;
        let k = ideal.dim();
        let projection = Matrix::from_rows_unchecked(n - k, inv.rows().iter().map(|r| r[k..].to_vec()).collect());
        let cb = comp.basis();
        let mut table = Vec::with_capacity(cb.len() * cb.len());
        for x in cb {
            for y in cb {
                table.push(projection.apply(&f, &self.bracket(x, y)));
            }
        }
        let algebra = LieAlgebra::from_full_table(f, n - k, table)?;
        Ok(Quotient {
            algebra,
            ideal: ideal.clone(),
            lift: comp.matrix(),
            projection,
        })
    }

    /// `L1 ⊕ L2` with block-diagonal structure constants.
    pub fn direct_sum(&self, other: &LieAlgebra<F>) -> Result<LieAlgebra<F>> {
        if self.field() != other.field() {
            return Err(Error::MixedFields);
        }
        let f = self.field().clone();
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut entries = Vec::new();
        for i in 0..n1 {
            for j in i + 1..n1 {
                let mut v = self.structure_constant(i, j).to_vec();
                v.extend(linalg::zero_vec(&f, n2));
                entries.push((i, j, v));
            }
        }
        for i in 0..n2 {
            for j in i + 1..n2 {
                let mut v = linalg::zero_vec(&f, n1);
                v.extend(other.structure_constant(i, j).iter().cloned());
                entries.push((n1 + i, n1 + j, v));
            }
        }
        let mut names: Vec<String> = self.names().iter().map(|s| format!("{s}_1")).collect();
        names.extend(other.names().iter().map(|s| format!("{s}_2")));
        LieAlgebra::new(f, n, entries)?.with_names(names)
    }

    /// The same algebra written in a new basis: row `i` of `basis` is the
    /// `i`-th new basis vector in old coordinates.
    pub fn change_basis(&self, basis: &Matrix<F::Elem>) -> Result<LieAlgebra<F>> {
        let f = self.field().clone();
        let inv = linalg::inverse(&f, basis)?;
        let rows = basis.rows();
        let mut table = Vec::with_capacity(rows.len() * rows.len());
        for x in rows {
            for y in rows {
                table.push(inv.apply(&f, &self.bracket(x, y)));
            }
        }
        LieAlgebra::from_full_table(f, rows.len(), table)
    }

    /// `{x in V : [x, t] in K for every t in targets}`.
    pub fn ad_preimage(
        &self,
        v: &Subspace<F::Elem>,
        targets: &[Vec<F::Elem>],
        k: &Subspace<F::Elem>,
    ) -> Subspace<F::Elem> {
        let f = self.field();
        let n = self.dim();
        if v.is_zero() || k.is_full() || targets.is_empty() {
            return v.clone();
        }
        let vm = v.matrix();
        let ann = kernel(f, &k.matrix()).matrix().transpose();
        let mut m = Matrix::zero(f, v.dim(), 0);
        for t in targets {
            let block = matmul(f, &matmul(f, &vm, &self.ad(t)), &ann);
            m = m.augment(&block).expect("same row count");
        }
        let coeffs = left_kernel(f, &m);
        Subspace::span(f, n, coeffs.basis().iter().map(|c| vm.apply(f, c)).collect())
    }

    /// The largest ideal of `L` contained in `u`.
    pub fn core(&self, u: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let gens: Vec<_> = (0..self.dim()).map(|i| self.unit(i)).collect();
        let mut cur = u.clone();
        loop {
            let next = self.ad_preimage(&cur, &gens, &cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// True if `[x, y] = 0` for all basis pairs of `u` and `v`.
    pub fn commute(&self, u: &Subspace<F::Elem>, v: &Subspace<F::Elem>) -> bool {
        u.basis()
            .iter()
            .all(|x| v.basis().iter().all(|y| is_zero_vec(self.field(), &self.bracket(x, y))))
    }
}

impl LieAlgebra<FiniteField> {
    /// The same structure constants over `GF(p^k)`. Prime-field residues are
    /// also valid element codes of the extension.
    pub fn extend_scalars(&self, k: u32) -> Result<LieAlgebra<FiniteField>> {
        if self.field().degree() != 1 {
            return Err(Error::InvalidField("scalar extension starts from a prime field".into()));
        }
        let ext = FiniteField::extension(self.field().p(), k)?;
        let n = self.dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                entries.push((i, j, self.structure_constant(i, j).to_vec()));
            }
        }
        LieAlgebra::new(ext, n, entries)?.with_names(self.names().to_vec())
    }
}
