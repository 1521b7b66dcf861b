//! Construction of sl2(C)-equivariant morphisms V_n (x) V_m -> V_k.
//!
//! By Schur's lemma the space of such morphisms is one-dimensional exactly
//! when V_k occurs in the Clebsch-Gordan decomposition, and zero otherwise.
//! The construction picks the canonical representative that sends the chain
//! F^j u_k to e_j and every other submodule chain to zero: writing the chain
//! basis as the rows of a matrix B and the chain images as a matrix I, the
//! morphism is B^{-1} I. Ordering the chain basis by decreasing weight makes
//! B block-diagonal (one block per weight), so only n+m+1 small blocks are
//! inverted instead of the full (n+1)(m+1) matrix.
//!
//! When n = m the morphism is supported on the symmetric or the exterior
//! square, decided by 2n - k mod 4, and is computed there and extended
//! (anti)symmetrically to the tensor square.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::clebsch::{all_chains, decompose_tensor};
use crate::error::Error;
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::sl2::{irrep, product_space, Generator, ProductSpace, ProductSpaceKind};

/// Behaviour of a morphism on V_n (x) V_n under swapping the factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    None,
    Symmetric,
    Antisymmetric,
}

/// An equivariant morphism V_n (x) V_m -> V_k given by its matrix in the
/// fixed tensor basis (columns indexed by e_i (x) f_j in lexicographic
/// order, rows by the target basis of V_k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantMorphism {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub matrix: RationalMatrix,
    pub symmetry: Symmetry,
}

impl EquivariantMorphism {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Image of the basis tensor e_i (x) f_j, as coordinates in V_k.
    pub fn apply_basis_pair(&self, i: usize, j: usize) -> Vec<Rational> {
        self.matrix.col(i * (self.m + 1) + j)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        EquivariantMorphism {
            matrix: self.matrix.scale(c),
            ..self.clone()
        }
    }
}

fn symmetry_of(n: usize, m: usize, k: usize) -> Symmetry {
    if n != m {
        return Symmetry::None;
    }
    let r = (2 * n as i64 - k as i64).rem_euclid(4);
    match r {
        0 => Symmetry::Symmetric,
        2 => Symmetry::Antisymmetric,
        _ => Symmetry::None,
    }
}

/// Build the canonical equivariant morphism V_n (x) V_m -> V_k (n >= m).
///
/// Returns the zero morphism when V_k does not occur in V_n (x) V_m. The
/// nonzero morphism is normalized by F^j u_k -> e_j on the weight-k chain.
pub fn build_morphism(n: usize, m: usize, k: usize) -> Result<EquivariantMorphism, Error> {
    if n < m {
        return Err(Error::ArgumentOrder { n, m });
    }
    let symmetry = symmetry_of(n, m, k);
    let tensor_dim = (n + 1) * (m + 1);
    if !decompose_tensor(n, m)?.contains(k) {
        return Ok(EquivariantMorphism {
            n,
            m,
            k,
            matrix: RationalMatrix::zeros(k + 1, tensor_dim),
            symmetry,
        });
    }

    let kind = match symmetry {
        Symmetry::None => ProductSpaceKind::Tensor { n, m },
        Symmetry::Symmetric => ProductSpaceKind::Sym2 { n },
        Symmetry::Antisymmetric => ProductSpaceKind::Wedge2 { n },
    };
    let space = product_space(kind);
    let gamma_w = chain_normalized_morphism(&space, k)?;

    // Extend from the (anti)symmetric square back to the tensor square:
    // the bilinear map is Gamma_W composed with x (x) y -> x ^ y resp.
    // x (x) y -> x . y, so columns are copied with the swap sign, and the
    // diagonal doubles in the symmetric case (e_i (x) e_i maps to the
    // symmetrization 2 e_i (x) e_i = 2 e_i . e_i).
    let matrix = match symmetry {
        Symmetry::None => gamma_w,
        Symmetry::Symmetric | Symmetry::Antisymmetric => {
            let anti = symmetry == Symmetry::Antisymmetric;
            let mut full = RationalMatrix::zeros(k + 1, tensor_dim);
            for i in 0..=n {
                for j in 0..=m {
                    if anti && i == j {
                        continue;
                    }
                    let (a, b) = (i.min(j), i.max(j));
                    let src = space.index_of(a, b);
                    for r in 0..=k {
                        let v = gamma_w[(r, src)].clone();
                        full[(r, i * (m + 1) + j)] = if anti && i > j {
                            -v
                        } else if !anti && i == j {
                            &v + &v
                        } else {
                            v
                        };
                    }
                }
            }
            full
        }
    };

    Ok(EquivariantMorphism {
        n,
        m,
        k,
        matrix,
        symmetry,
    })
}

/// The morphism from a product space onto its weight-k summand, normalized
/// to the identity on the chain of V_k: rows of the result are read off from
/// the inverse of the chain-basis matrix, inverted block by block per weight.
fn chain_normalized_morphism(space: &ProductSpace, k: usize) -> Result<RationalMatrix, Error> {
    let chains = all_chains(space);
    let dim = space.dim();

    // Enumerate chain vectors with their weights and remember where the
    // chain of V_k sits.
    let mut chain_vectors = Vec::with_capacity(dim);
    let mut chain_weights = Vec::with_capacity(dim);
    let mut k_chain_positions = vec![usize::MAX; k + 1];
    for chain in &chains {
        for (j, v) in chain.vectors.iter().enumerate() {
            if chain.k == k {
                k_chain_positions[j] = chain_vectors.len();
            }
            chain_vectors.push(v.clone());
            chain_weights.push(chain.k as i64 - 2 * j as i64);
        }
    }

    // Group rows (ambient basis indices) and columns (chain positions) by
    // weight, descending, and invert one block per weight.
    let mut by_weight: BTreeMap<i64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for b in 0..dim {
        by_weight.entry(-space.weights[b]).or_default().0.push(b);
    }
    for (p, &w) in chain_weights.iter().enumerate() {
        by_weight.entry(-w).or_default().1.push(p);
    }

    let mut blocks = Vec::new();
    for (ambient, positions) in by_weight.values() {
        debug_assert_eq!(ambient.len(), positions.len());
        blocks.push(RationalMatrix::from_fn(
            positions.len(),
            positions.len(),
            |r, c| chain_vectors[positions[c]][ambient[r]].clone(),
        ));
    }
    let inverse = RationalMatrix::block_diagonal_invert(&blocks)?;

    // Row j of the morphism is the row of B^{-1} belonging to F^j u_k,
    // scattered back to the ambient column order.
    let mut gamma = RationalMatrix::zeros(k + 1, dim);
    let mut offset = 0;
    for (ambient, positions) in by_weight.values() {
        for (y, &p) in positions.iter().enumerate() {
            if let Some(j) = k_chain_positions.iter().position(|&q| q == p) {
                for (x, &b) in ambient.iter().enumerate() {
                    gamma[(j, b)] = inverse[(offset + y, offset + x)].clone();
                }
            }
        }
        offset += ambient.len();
    }
    Ok(gamma)
}

/// Exact equivariance check: Gamma . rho(x) = rho_k(x) . Gamma for H, E, F.
pub fn check_equivariance(g: &EquivariantMorphism) -> bool {
    let space = product_space(ProductSpaceKind::Tensor { n: g.n, m: g.m });
    let target = irrep(g.k);
    Generator::ALL.iter().all(|&x| {
        g.matrix.mul(space.mat(x)) == target.mat(x).mul(&g.matrix)
    })
}

/// The unique nonzero scalar with `a = lambda * b`, when it exists.
pub fn compare_up_to_scale(a: &EquivariantMorphism, b: &EquivariantMorphism) -> Option<Rational> {
    if (a.n, a.m, a.k) != (b.n, b.m, b.k) {
        return None;
    }
    let rows = b.matrix.rows();
    let cols = b.matrix.cols();
    let mut lambda: Option<Rational> = None;
    for r in 0..rows {
        for c in 0..cols {
            let bv = &b.matrix[(r, c)];
            if !bv.is_zero() {
                let l = &a.matrix[(r, c)] / bv;
                if l.is_zero() {
                    return None;
                }
                lambda = Some(l);
                break;
            }
        }
        if lambda.is_some() {
            break;
        }
    }
    let lambda = lambda?;
    if a.matrix == b.matrix.scale(&lambda) {
        Some(lambda)
    } else {
        None
    }
}

/// The explicit morphism tables used by the 25-dimensional construction,
/// in their traditional hand-normalized form. `build_morphism` reproduces
/// each of them up to one global rational scale.
pub mod golden {
    use super::*;

    fn from_entries(
        n: usize,
        m: usize,
        k: usize,
        symmetry: Symmetry,
        entries: &[(usize, usize, usize, i64)],
    ) -> EquivariantMorphism {
        let mut matrix = RationalMatrix::zeros(k + 1, (n + 1) * (m + 1));
        for &(i, j, target, coeff) in entries {
            matrix[(target, i * (m + 1) + j)] = Rational::from_int(coeff);
            if symmetry == Symmetry::Antisymmetric {
                matrix[(target, j * (m + 1) + i)] = Rational::from_int(-coeff);
            }
        }
        EquivariantMorphism {
            n,
            m,
            k,
            matrix,
            symmetry,
        }
    }

    /// Skew-symmetric V_6 x V_6 -> V_6.
    pub fn gamma_6_6_6() -> EquivariantMorphism {
        from_entries(
            6,
            6,
            6,
            Symmetry::Antisymmetric,
            &[
                (0, 3, 0, -1),
                (0, 4, 1, -2),
                (0, 5, 2, -2),
                (0, 6, 3, -1),
                (1, 2, 0, 1),
                (1, 3, 1, 1),
                (1, 5, 3, -1),
                (1, 6, 4, -1),
                (2, 3, 2, 1),
                (2, 4, 3, 1),
                (2, 6, 5, -1),
                (3, 4, 4, 1),
                (3, 5, 5, 1),
                (3, 6, 6, -1),
                (4, 5, 6, 2),
            ],
        )
    }

    /// Skew-symmetric V_6 x V_6 -> V_2.
    pub fn gamma_6_6_2() -> EquivariantMorphism {
        from_entries(
            6,
            6,
            2,
            Symmetry::Antisymmetric,
            &[
                (0, 5, 0, 1),
                (0, 6, 1, 3),
                (1, 4, 0, -1),
                (1, 5, 1, -2),
                (1, 6, 2, 3),
                (2, 3, 0, 1),
                (2, 4, 1, 1),
                (2, 5, 2, -5),
                (3, 4, 2, 6),
            ],
        )
    }

    /// Bilinear V_6 x V_4 -> V_2.
    pub fn gamma_6_4_2() -> EquivariantMorphism {
        from_entries(
            6,
            4,
            2,
            Symmetry::None,
            &[
                (0, 4, 0, 1),
                (1, 3, 0, -1),
                (1, 4, 1, 1),
                (2, 2, 0, 1),
                (2, 3, 1, -2),
                (2, 4, 2, 1),
                (3, 1, 0, -1),
                (3, 2, 1, 3),
                (3, 3, 2, -3),
                (4, 0, 0, 1),
                (4, 1, 1, -4),
                (4, 2, 2, 6),
                (5, 0, 1, 5),
                (5, 1, 2, -10),
                (6, 0, 2, 15),
            ],
        )
    }

    /// Skew-symmetric V_4 x V_4 -> V_2.
    pub fn gamma_4_4_2() -> EquivariantMorphism {
        from_entries(
            4,
            4,
            2,
            Symmetry::Antisymmetric,
            &[
                (0, 3, 0, -1),
                (0, 4, 1, -2),
                (1, 2, 0, 1),
                (1, 3, 1, 1),
                (1, 4, 2, -2),
                (2, 3, 2, 3),
            ],
        )
    }

    /// Lookup by signature; used by `morphism --normalize paper`.
    pub fn lookup(n: usize, m: usize, k: usize) -> Option<EquivariantMorphism> {
        match (n, m, k) {
            (6, 6, 6) => Some(gamma_6_6_6()),
            (6, 6, 2) => Some(gamma_6_6_2()),
            (6, 4, 2) => Some(gamma_6_4_2()),
            (4, 4, 2) => Some(gamma_4_4_2()),
            _ => None,
        }
    }
}
