//! Structure-constant algebras: bracket evaluation, Jacobi verification,
//! center, derived subalgebra, lower central series.
//!
//! A [`StructureConstants`] value is only required to be antisymmetric;
//! candidates that violate the Jacobi identity are first-class citizens,
//! since the classification pipeline works by building such candidates and
//! eliminating them. The Jacobi check itself uses the adjoint identity
//! ad_{[e_i,e_j]} = ad_{e_i} ad_{e_j} - ad_{e_j} ad_{e_i}, which reuses
//! exact matrix products and reports the first failing pair.

use crate::error::Error;
use crate::matrix::{row_space_basis, vec_add, vec_is_zero, vec_zero, RationalMatrix, RationalVector};
use crate::rational::Rational;

/// The full antisymmetric bracket tensor of a finite-dimensional algebra:
/// `c[i][j]` is the coordinate vector of [e_i, e_j].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Vec<RationalVector>>,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants {
            dim,
            c: vec![vec![vec_zero(dim); dim]; dim],
        }
    }

    /// Build from the entries with i < j; antisymmetry fills in the rest.
    pub fn from_upper_brackets(
        dim: usize,
        brackets: impl IntoIterator<Item = (usize, usize, RationalVector)>,
    ) -> Result<Self, Error> {
        let mut sc = Self::zero(dim);
        for (i, j, v) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    dim,
                });
            }
            if i >= j {
                return Err(Error::InvalidInput(format!(
                    "bracket entries must have i < j, got ({i}, {j})"
                )));
            }
            if v.len() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "bracket value for ({i}, {j}) has length {}, expected {dim}",
                    v.len()
                )));
            }
            sc.set_bracket(i, j, v);
        }
        Ok(sc)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Set [e_i, e_j] = v and [e_j, e_i] = -v.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: RationalVector) {
        assert!(i != j, "diagonal brackets are zero by antisymmetry");
        self.c[j][i] = v.iter().map(|x| -x).collect();
        self.c[i][j] = v;
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &RationalVector {
        &self.c[i][j]
    }

    /// Bilinear bracket of arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> RationalVector {
        let mut out = vec_zero(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let scale = &x[i] * &y[j];
                for r in 0..self.dim {
                    let v = &self.c[i][j][r];
                    if !v.is_zero() {
                        let contrib = v * &scale;
                        out[r] += &contrib;
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad_{e_i} in the algebra basis.
    pub fn adjoint(&self, i: usize) -> Result<RationalMatrix, Error> {
        if i >= self.dim {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim });
        }
        Ok(RationalMatrix::from_fn(self.dim, self.dim, |r, j| {
            self.c[i][j][r].clone()
        }))
    }

    pub fn adjoints(&self) -> Vec<RationalMatrix> {
        (0..self.dim).map(|i| self.adjoint(i).unwrap()).collect()
    }

    /// Matrix of ad_x for an arbitrary element x.
    pub fn adjoint_of(&self, x: &[Rational]) -> RationalMatrix {
        RationalMatrix::from_fn(self.dim, self.dim, |r, j| {
            let mut acc = Rational::zero();
            for i in 0..self.dim {
                if !x[i].is_zero() && !self.c[i][j][r].is_zero() {
                    let t = &x[i] * &self.c[i][j][r];
                    acc += &t;
                }
            }
            acc
        })
    }

    /// Jacobi check through the adjoint identity. On failure reports the
    /// first pair (i, j) together with the defect matrix
    /// ad_{[e_i,e_j]} - (ad_i ad_j - ad_j ad_i).
    pub fn is_lie_algebra(&self) -> (bool, Option<JacobiWitness>) {
        let ads = self.adjoints();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let lhs = self.adjoint_of(&self.c[i][j]);
                let rhs = ads[i].commutator(&ads[j]);
                let defect = lhs.sub(&rhs);
                if !defect.is_zero() {
                    return (false, Some(JacobiWitness { i, j, defect }));
                }
            }
        }
        (true, None)
    }

    /// [e_x, [e_y, e_z]] + [e_y, [e_z, e_x]] + [e_z, [e_x, e_y]].
    pub fn jacobiator(&self, x: usize, y: usize, z: usize) -> RationalVector {
        let t1 = self.adjoint_term(x, y, z);
        let t2 = self.adjoint_term(y, z, x);
        let t3 = self.adjoint_term(z, x, y);
        vec_add(&vec_add(&t1, &t2), &t3)
    }

    /// [e_a, [e_b, e_c]] for basis elements.
    pub fn adjoint_term(&self, a: usize, b: usize, c: usize) -> RationalVector {
        let inner = &self.c[b][c];
        let mut out = vec_zero(self.dim);
        for j in 0..self.dim {
            if inner[j].is_zero() {
                continue;
            }
            for r in 0..self.dim {
                if !self.c[a][j][r].is_zero() {
                    let t = &inner[j] * &self.c[a][j][r];
                    out[r] += &t;
                }
            }
        }
        out
    }

    /// Kernel of the adjoint representation.
    pub fn center(&self) -> Subspace {
        // x is central iff sum_i x_i c[i][j] = 0 for every j.
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            for r in 0..self.dim {
                rows.push((0..self.dim).map(|i| self.c[i][j][r].clone()).collect());
            }
        }
        let kernel = RationalMatrix::from_rows(rows).kernel_basis();
        Subspace::from_spanning(self.dim, &kernel)
    }

    /// Span of all brackets [e_i, e_j].
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut vectors = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if !vec_is_zero(&self.c[i][j]) {
                    vectors.push(self.c[i][j].clone());
                }
            }
        }
        Subspace::from_spanning(self.dim, &vectors)
    }

    /// g, [g, g], [g, [g, g]], ... computed until the terms stabilize.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full: Vec<RationalVector> = (0..self.dim)
            .map(|i| {
                let mut v = vec_zero(self.dim);
                v[i] = Rational::one();
                v
            })
            .collect();
        let mut series = vec![Subspace::from_spanning(self.dim, &full)];
        loop {
            let last = series.last().unwrap();
            let mut vectors = Vec::new();
            for i in 0..self.dim {
                for w in &last.basis {
                    let mut basis_vec = vec_zero(self.dim);
                    basis_vec[i] = Rational::one();
                    let b = self.bracket(&basis_vec, w);
                    if !vec_is_zero(&b) {
                        vectors.push(b);
                    }
                }
            }
            let next = Subspace::from_spanning(self.dim, &vectors);
            let stable = next == *series.last().unwrap();
            let zero = next.dim() == 0;
            if !stable {
                series.push(next);
            }
            if stable || zero {
                return series;
            }
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().dim() == self.dim
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().dim() == 0
    }

    /// Structure constants in the basis given by the columns of `p`.
    pub fn change_of_basis(&self, p: &RationalMatrix) -> Result<StructureConstants, Error> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "change of basis must be {0}x{0}",
                self.dim
            )));
        }
        let p_inv = p.invert()?;
        let mut out = Self::zero(self.dim);
        for a in 0..self.dim {
            for b in (a + 1)..self.dim {
                let bracket = self.bracket(&p.col(a), &p.col(b));
                out.set_bracket(a, b, p_inv.mul_vec(&bracket));
            }
        }
        Ok(out)
    }

    /// All brackets with i < j and a nonzero value, for serialization.
    pub fn upper_brackets(&self) -> Vec<(usize, usize, RationalVector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if !vec_is_zero(&self.c[i][j]) {
                    out.push((i, j, self.c[i][j].clone()));
                }
            }
        }
        out
    }
}

/// Witness of a failed Jacobi identity: the first pair whose adjoint
/// identity has a nonzero defect.
#[derive(Debug, Clone)]
pub struct JacobiWitness {
    pub i: usize,
    pub j: usize,
    pub defect: RationalMatrix,
}

/// A subspace of the algebra's coordinate space, stored as a canonical
/// reduced-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<RationalVector>,
}

impl Subspace {
    pub fn from_spanning(ambient: usize, vectors: &[RationalVector]) -> Self {
        Subspace {
            ambient,
            basis: row_space_basis(vectors),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if vec_is_zero(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        row_space_basis(&rows).len() == self.basis.len()
    }
}

/// sl2(C) itself as structure constants in the basis (H, E, F).
pub fn sl2_structure_constants() -> StructureConstants {
    let mut sc = StructureConstants::zero(3);
    sc.set_bracket(0, 1, vec![Rational::zero(), Rational::from_int(2), Rational::zero()]);
    sc.set_bracket(0, 2, vec![Rational::zero(), Rational::zero(), Rational::from_int(-2)]);
    sc.set_bracket(1, 2, vec![Rational::one(), Rational::zero(), Rational::zero()]);
    sc
}

/// The 3-dimensional Heisenberg algebra [x, y] = z.
pub fn heisenberg_structure_constants() -> StructureConstants {
    let mut sc = StructureConstants::zero(3);
    sc.set_bracket(0, 1, vec![Rational::zero(), Rational::zero(), Rational::one()]);
    sc
}
