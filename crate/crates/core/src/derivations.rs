//! The derivation algebra, the sympathy predicate, and the homogeneous
//! linear system satisfied by semisimple derivations.
//!
//! A linear map D is a derivation iff [D, ad_{e_i}] = ad(D e_i) for every
//! basis element; stacking these identities gives a homogeneous system in
//! the dim^2 unknown entries of D. When some basis element has a diagonal
//! adjoint (the Cartan element H of an assembled algebra always does) the
//! solver splits the system by weight: a derivation decomposes into pieces
//! that shift the ad-H weight by a fixed amount mu, the system restricted to
//! each mu is tiny, and Der(g) is the direct sum of the per-mu kernels. The
//! split is exact, not heuristic: [ad_H, -] acts semisimply on End(g) and
//! preserves Der(g), because [ad_H, D] = -ad(D H) is itself inner.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::lie::StructureConstants;
use crate::matrix::{row_space_basis, vec_is_zero, RationalMatrix, RationalVector, SparseEchelon};
use crate::rational::Rational;
use crate::semidirect::{AssembledAlgebra, BracketTable, RadicalSpec};

/// A basis of Der(g), each element a dim x dim matrix.
#[derive(Debug, Clone)]
pub struct DerivationSpace {
    pub basis: Vec<RationalMatrix>,
}

impl DerivationSpace {
    pub fn dim_total(&self) -> usize {
        self.basis.len()
    }
}

/// Exact check of the derivation identity [D, ad_{e_i}] = ad(D e_i) for all i.
pub fn is_derivation(sc: &StructureConstants, d: &RationalMatrix) -> bool {
    if d.rows() != sc.dim() || d.cols() != sc.dim() {
        return false;
    }
    let ads = sc.adjoints();
    for i in 0..sc.dim() {
        let lhs = d.commutator(&ads[i]);
        let rhs = sc.adjoint_of(&d.col(i));
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Whether `d` lies in the span of the adjoint matrices ad(g).
pub fn in_adjoint_span(sc: &StructureConstants, d: &RationalMatrix) -> bool {
    let mut rows: Vec<RationalVector> = sc.adjoints().iter().map(|a| a.flatten()).collect();
    let base_rank = row_space_basis(&rows).len();
    rows.push(d.flatten());
    row_space_basis(&rows).len() == base_rank
}

/// A derivation that is not inner.
pub fn is_outer_derivation(sc: &StructureConstants, d: &RationalMatrix) -> bool {
    is_derivation(sc, d) && !in_adjoint_span(sc, d)
}

/// Basis of Der(g) as the kernel of the stacked derivation identities.
/// Requires the input to satisfy the Jacobi identity.
pub fn derivation_space(sc: &StructureConstants) -> Result<DerivationSpace, Error> {
    let (ok, witness) = sc.is_lie_algebra();
    if !ok {
        let w = witness.unwrap();
        return Err(Error::NotALieAlgebra { i: w.i, j: w.j });
    }
    let dim = sc.dim();
    let ads = sc.adjoints();

    // Grading weights: diagonal of the best diagonal adjoint, zero otherwise
    // (the zero grading puts every unknown in one class, i.e. the plain
    // dense solve).
    let weights = grading_weights(&ads);

    // Partition the unknown entries (r, s) of D by weight shift mu = w_r - w_s.
    let mut classes: BTreeMap<Rational, Vec<(usize, usize)>> = BTreeMap::new();
    for r in 0..dim {
        for s in 0..dim {
            let mu = &weights[r] - &weights[s];
            classes.entry(mu).or_default().push((r, s));
        }
    }

    let mut basis = Vec::new();
    for (mu, unknowns) in &classes {
        let mut position = BTreeMap::new();
        for (p, &(r, s)) in unknowns.iter().enumerate() {
            position.insert((r, s), p);
        }
        let mut echelon = SparseEchelon::new(unknowns.len());

        // Equation block i, entry (r, s) reads
        //   sum_t D[r,t] A_i[t,s] - sum_t A_i[r,t] D[t,s] - sum_k A_k[r,s] D[k,i] = 0
        // and touches only unknowns of class (w_r - w_s) - w_i.
        for i in 0..dim {
            for r in 0..dim {
                for s in 0..dim {
                    if &(&weights[r] - &weights[s]) - &weights[i] != *mu {
                        continue;
                    }
                    let mut row: Vec<(usize, Rational)> = Vec::new();
                    for t in 0..dim {
                        let a = &ads[i][(t, s)];
                        if !a.is_zero() {
                            if let Some(&p) = position.get(&(r, t)) {
                                row.push((p, a.clone()));
                            }
                        }
                        let b = &ads[i][(r, t)];
                        if !b.is_zero() {
                            if let Some(&p) = position.get(&(t, s)) {
                                row.push((p, -b));
                            }
                        }
                    }
                    for k in 0..dim {
                        let c = &ads[k][(r, s)];
                        if !c.is_zero() {
                            if let Some(&p) = position.get(&(k, i)) {
                                row.push((p, -c));
                            }
                        }
                    }
                    if !row.is_empty() {
                        echelon.insert(collect_terms(row));
                    }
                }
            }
        }

        for vec in echelon.kernel_basis() {
            let mut d = RationalMatrix::zeros(dim, dim);
            for (p, &(r, s)) in unknowns.iter().enumerate() {
                d[(r, s)] = vec[p].clone();
            }
            basis.push(d);
        }
    }

    debug_assert!(basis.iter().all(|d| is_derivation(sc, d)));
    Ok(DerivationSpace { basis })
}

/// Eigenvalues of the most refining diagonal adjoint, or all zeros.
fn grading_weights(ads: &[RationalMatrix]) -> Vec<Rational> {
    let dim = ads.len();
    let mut best: Option<(usize, Vec<Rational>)> = None;
    for a in ads {
        let diagonal = (0..dim).all(|r| {
            (0..dim).all(|s| r == s || a[(r, s)].is_zero())
        });
        if !diagonal {
            continue;
        }
        let w: Vec<Rational> = (0..dim).map(|r| a[(r, r)].clone()).collect();
        let mut distinct: Vec<&Rational> = w.iter().collect();
        distinct.sort();
        distinct.dedup();
        let count = distinct.len();
        if best.as_ref().map_or(true, |(c, _)| count > *c) {
            best = Some((count, w));
        }
    }
    best.map(|(_, w)| w)
        .unwrap_or_else(|| vec![Rational::zero(); dim])
}

fn collect_terms(mut row: Vec<(usize, Rational)>) -> Vec<(usize, Rational)> {
    row.sort_by_key(|&(p, _)| p);
    let mut out: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
    for (p, v) in row {
        match out.last_mut() {
            Some((q, acc)) if *q == p => *acc += &v,
            _ => out.push((p, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// dim ad(g) = dim g - dim Z(g).
pub fn inner_dimension(sc: &StructureConstants) -> usize {
    sc.dim() - sc.center().dim()
}

/// The three defining properties of a sympathetic Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SympathyReport {
    pub center_trivial: bool,
    pub derivations_inner: bool,
    pub perfect: bool,
}

impl SympathyReport {
    pub fn is_sympathetic(&self) -> bool {
        self.center_trivial && self.derivations_inner && self.perfect
    }
}

/// Evaluate the sympathy predicate: trivial center, perfect, and
/// Der(g) = ad(g). The last is tested as dim Der = dim g - dim Z together
/// with the containment ad(g) in Der(g).
pub fn is_sympathetic(sc: &StructureConstants) -> Result<SympathyReport, Error> {
    let der = derivation_space(sc)?;
    let inner = inner_dimension(sc);
    let ad_contained = sc
        .adjoints()
        .iter()
        .all(|a| is_derivation(sc, a));
    Ok(SympathyReport {
        center_trivial: sc.center().is_zero(),
        derivations_inner: ad_contained && der.dim_total() == inner,
        perfect: sc.is_perfect(),
    })
}

/// The homogeneous linear system satisfied by graded semisimple derivations.
///
/// Unknowns are (lambda, alpha_1, ..., alpha_k): lambda scales ad(H) on the
/// Levi part and alpha_i is the scalar on the highest-weight vector of
/// V_{n_i}. Each table entry [V_i, V_j] = V_p contributes
/// alpha_i + alpha_j - alpha_p = lambda (n_i + n_j - n_p), with the diagonal
/// form 2 alpha_i - alpha_p = lambda (2 n_i - n_p).
#[derive(Debug, Clone)]
pub struct SemisimpleSystem {
    pub module_count: usize,
    pub equations: RationalMatrix,
    pub solution_basis: Vec<RationalVector>,
}

impl SemisimpleSystem {
    pub fn unknowns(&self) -> usize {
        self.module_count + 1
    }

    pub fn is_solution(&self, v: &[Rational]) -> bool {
        v.len() == self.unknowns() && vec_is_zero(&self.equations.mul_vec(v))
    }

    /// Basis of the solutions with lambda = 0; by the inner-derivation
    /// criterion any nonzero such solution is an outer derivation of every
    /// candidate with this table.
    pub fn outer_basis(&self) -> Vec<RationalVector> {
        let mut rows: Vec<RationalVector> = (0..self.equations.rows())
            .map(|r| self.equations.row(r).to_vec())
            .collect();
        let mut pin_lambda = crate::matrix::vec_zero(self.unknowns());
        pin_lambda[0] = Rational::one();
        rows.push(pin_lambda);
        RationalMatrix::from_rows(rows).kernel_basis()
    }

    /// The inner solution (1, n_1, ..., n_k) coming from ad of the Cartan
    /// element.
    pub fn inner_line(spec: &RadicalSpec) -> RationalVector {
        let mut v = vec![Rational::one()];
        v.extend(spec.weights.iter().map(|&n| Rational::from_int(n as i64)));
        v
    }

    /// A graded outer derivation exists iff some nonzero solution has
    /// lambda = 0 (equivalently, the solution space is larger than the
    /// inner line).
    pub fn has_outer_solution(&self) -> bool {
        !self.outer_basis().is_empty()
    }
}

/// Build and solve the semisimple-derivation system for a table.
pub fn semisimple_system(spec: &RadicalSpec, table: &BracketTable) -> SemisimpleSystem {
    let k = spec.module_count();
    let mut rows = Vec::new();
    for e in &table.entries {
        let mut row = crate::matrix::vec_zero(k + 1);
        let (ni, nj, np) = (
            spec.weights[e.i] as i64,
            spec.weights[e.j] as i64,
            spec.weights[e.target] as i64,
        );
        row[0] = Rational::from_int(-(ni + nj - np));
        row[1 + e.i] = &row[1 + e.i] + &Rational::one();
        row[1 + e.j] = &row[1 + e.j] + &Rational::one();
        row[1 + e.target] = &row[1 + e.target] - &Rational::one();
        rows.push(row);
    }
    let equations = if rows.is_empty() {
        RationalMatrix::zeros(0, k + 1)
    } else {
        RationalMatrix::from_rows(rows)
    };
    let solution_basis = equations.kernel_basis();
    SemisimpleSystem {
        module_count: k,
        equations,
        solution_basis,
    }
}

/// The block-scalar map that is zero on sl2 and alpha_i times the identity
/// on V_{n_i}, together with the outcome of the derivation identity check.
pub fn graded_derivation(
    assembled: &AssembledAlgebra,
    scalars: &[Rational],
) -> (RationalMatrix, bool) {
    assert_eq!(scalars.len(), assembled.spec.module_count());
    let dim = assembled.layout.dim;
    let mut d = RationalMatrix::zeros(dim, dim);
    for (mi, &off) in assembled.layout.module_offsets.iter().enumerate() {
        for r in 0..=assembled.spec.weights[mi] {
            d[(off + r, off + r)] = scalars[mi].clone();
        }
    }
    let valid = is_derivation(&assembled.sc, &d);
    (d, valid)
}
