//! Assembly of g = sl2(C) x| h from a radical module decomposition and a
//! multiplication table.
//!
//! The radical h = V_{n_1} + ... + V_{n_k} is described by its weight list;
//! the bracket of two radical summands is a scalar multiple of the canonical
//! equivariant morphism onto the single target module prescribed by the
//! table. The sl2 block and the mixed sl2-radical blocks are forced: they
//! reproduce the sl2 relations and the module actions. No Jacobi check is
//! performed at assembly time — candidates are allowed to fail it.

use serde::{Deserialize, Serialize};

use crate::clebsch::{decompose_sym2, decompose_tensor, decompose_wedge2};
use crate::equivariant::{build_morphism, EquivariantMorphism};
use crate::error::Error;
use crate::lie::StructureConstants;
use crate::matrix::vec_zero;
use crate::rational::Rational;
use crate::sl2::irrep;

/// Ordered list of highest weights of the radical modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalSpec {
    pub weights: Vec<usize>,
}

impl RadicalSpec {
    pub fn new(weights: Vec<usize>) -> Self {
        assert!(!weights.is_empty(), "radical must contain at least one module");
        RadicalSpec { weights }
    }

    pub fn module_count(&self) -> usize {
        self.weights.len()
    }

    pub fn dim(&self) -> usize {
        3 + self.weights.iter().map(|&n| n + 1).sum::<usize>()
    }
}

/// One table entry: [V_i, V_j] = scale * Gamma^{target}(V_i, V_j), i <= j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub scale: Rational,
    pub target: usize,
}

/// Multiplication table of the radical: absent pairs bracket to zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTable {
    pub entries: Vec<BracketEntry>,
}

impl BracketTable {
    pub fn from_targets(entries: &[(usize, usize, usize)]) -> Self {
        BracketTable {
            entries: entries
                .iter()
                .map(|&(i, j, target)| BracketEntry {
                    i,
                    j,
                    scale: Rational::one(),
                    target,
                })
                .collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&BracketEntry> {
        let (a, b) = (i.min(j), i.max(j));
        self.entries.iter().find(|e| (e.i, e.j) == (a, b))
    }

    /// Same table with every scale replaced through `f(i, j, old_scale)`.
    pub fn rescaled(&self, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        BracketTable {
            entries: self
                .entries
                .iter()
                .map(|e| BracketEntry {
                    scale: f(e.i, e.j),
                    ..e.clone()
                })
                .collect(),
        }
    }
}

/// Block offsets of an assembled algebra: sl2 occupies indices 0..3, module
/// `i` occupies `module_offsets[i] .. module_offsets[i] + weights[i] + 1`.
#[derive(Debug, Clone, Serialize)]
pub struct Layout {
    pub module_offsets: Vec<usize>,
    pub module_weights: Vec<usize>,
    pub dim: usize,
}

impl Layout {
    pub fn new(spec: &RadicalSpec) -> Self {
        let mut offsets = Vec::with_capacity(spec.module_count());
        let mut next = 3;
        for &n in &spec.weights {
            offsets.push(next);
            next += n + 1;
        }
        Layout {
            module_offsets: offsets,
            module_weights: spec.weights.clone(),
            dim: next,
        }
    }

    /// Which radical module a basis index belongs to; None for the sl2 block.
    pub fn module_of(&self, index: usize) -> Option<usize> {
        if index < 3 {
            return None;
        }
        self.module_offsets
            .iter()
            .zip(&self.module_weights)
            .position(|(&off, &n)| index >= off && index < off + n + 1)
    }
}

/// A candidate algebra sl2(C) x| h with its block layout.
#[derive(Debug, Clone)]
pub struct AssembledAlgebra {
    pub sc: StructureConstants,
    pub layout: Layout,
    pub spec: RadicalSpec,
    pub table: BracketTable,
}

/// Entries where the target weight has the wrong parity for the Z_2-grading
/// [h^a, h^b] in h^{a+b mod 2}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityViolation {
    pub i: usize,
    pub j: usize,
    pub target: usize,
}

pub fn parity_signature(spec: &RadicalSpec, table: &BracketTable) -> Vec<ParityViolation> {
    table
        .entries
        .iter()
        .filter(|e| {
            (spec.weights[e.i] + spec.weights[e.j]) % 2 != spec.weights[e.target] % 2
        })
        .map(|e| ParityViolation {
            i: e.i,
            j: e.j,
            target: e.target,
        })
        .collect()
}

fn validate_entry(spec: &RadicalSpec, e: &BracketEntry) -> Result<(), Error> {
    let k = spec.module_count();
    if e.i > e.j || e.j >= k || e.target >= k {
        return Err(Error::InvalidTable(format!(
            "entry ({}, {}) -> {} out of range for {k} modules",
            e.i, e.j, e.target
        )));
    }
    if e.scale.is_zero() {
        return Err(Error::InvalidTable(format!(
            "entry ({}, {}) has zero scale; drop the entry instead",
            e.i, e.j
        )));
    }
    let (ni, nj, np) = (spec.weights[e.i], spec.weights[e.j], spec.weights[e.target]);
    if e.i == e.j {
        if decompose_wedge2(ni).contains(np) {
            Ok(())
        } else if decompose_sym2(ni).contains(np) {
            Err(Error::SymmetricSlot { i: e.i, weight: np })
        } else {
            Err(Error::IncompatibleTarget {
                i: e.i,
                j: e.j,
                target: e.target,
                weight: np,
            })
        }
    } else if decompose_tensor(ni.max(nj), ni.min(nj))?.contains(np) {
        Ok(())
    } else {
        Err(Error::IncompatibleTarget {
            i: e.i,
            j: e.j,
            target: e.target,
            weight: np,
        })
    }
}

/// Assemble structure constants from a radical spec and a bracket table.
pub fn assemble(spec: &RadicalSpec, table: &BracketTable) -> Result<AssembledAlgebra, Error> {
    for e in &table.entries {
        validate_entry(spec, e)?;
    }
    for (idx, e) in table.entries.iter().enumerate() {
        if table.entries[..idx].iter().any(|d| (d.i, d.j) == (e.i, e.j)) {
            return Err(Error::InvalidTable(format!(
                "duplicate entry for pair ({}, {})",
                e.i, e.j
            )));
        }
    }

    let layout = Layout::new(spec);
    let dim = layout.dim;
    let mut sc = StructureConstants::zero(dim);

    // sl2 block in the basis (H, E, F).
    let mut he = vec_zero(dim);
    he[1] = Rational::from_int(2);
    sc.set_bracket(0, 1, he);
    let mut hf = vec_zero(dim);
    hf[2] = Rational::from_int(-2);
    sc.set_bracket(0, 2, hf);
    let mut ef = vec_zero(dim);
    ef[0] = Rational::one();
    sc.set_bracket(1, 2, ef);

    // Mixed block: [x, v] = rho_{n_i}(x) v for x in sl2.
    for (mi, &n) in spec.weights.iter().enumerate() {
        let rho = irrep(n);
        let off = layout.module_offsets[mi];
        for (xi, g) in [crate::sl2::Generator::H, crate::sl2::Generator::E, crate::sl2::Generator::F]
            .into_iter()
            .enumerate()
        {
            let mat = rho.mat(g);
            for j in 0..=n {
                let mut v = vec_zero(dim);
                let mut nonzero = false;
                for r in 0..=n {
                    if !mat[(r, j)].is_zero() {
                        v[off + r] = mat[(r, j)].clone();
                        nonzero = true;
                    }
                }
                if nonzero {
                    sc.set_bracket(xi, off + j, v);
                }
            }
        }
    }

    // Radical blocks: [u, w] = scale * Gamma^{n_p}_{n_i, n_j}(u (x) w).
    for e in &table.entries {
        let (ni, nj) = (spec.weights[e.i], spec.weights[e.j]);
        let np = spec.weights[e.target];
        let off_i = layout.module_offsets[e.i];
        let off_j = layout.module_offsets[e.j];
        let off_p = layout.module_offsets[e.target];

        // The morphism is built with the larger weight first; a swapped pair
        // picks up the antisymmetry sign.
        let (gamma, swapped): (EquivariantMorphism, bool) = if ni >= nj {
            (build_morphism(ni, nj, np)?, false)
        } else {
            (build_morphism(nj, ni, np)?, true)
        };

        for s in 0..=ni {
            let t_start = if e.i == e.j { s + 1 } else { 0 };
            for t in t_start..=nj {
                let image = if swapped {
                    crate::matrix::vec_scale(&gamma.apply_basis_pair(t, s), &-&e.scale)
                } else {
                    crate::matrix::vec_scale(&gamma.apply_basis_pair(s, t), &e.scale)
                };
                if image.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let mut v = vec_zero(dim);
                for (r, val) in image.into_iter().enumerate() {
                    v[off_p + r] = val;
                }
                sc.set_bracket(off_i + s, off_j + t, v);
            }
        }
    }

    Ok(AssembledAlgebra {
        sc,
        layout,
        spec: spec.clone(),
        table: table.clone(),
    })
}

/// The 25-dimensional sympathetic Lie algebra with Levi factor sl2(C):
/// radical V_6 + V_4 + V_6 + V_2 with
/// [V_{6a}, V_{6a}] = V_{6b}, [V_{6a}, V_4] = V_2, [V_{6a}, V_{6b}] = V_2,
/// [V_4, V_4] = V_2, and all other radical products zero.
pub fn build_benayadi25() -> AssembledAlgebra {
    let spec = RadicalSpec::new(vec![6, 4, 6, 2]);
    let table = BracketTable::from_targets(&[(0, 0, 2), (0, 1, 3), (0, 2, 3), (1, 1, 3)]);
    assemble(&spec, &table).expect("the 25-dimensional table is compatible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_is_zero;

    #[test]
    fn abelian_radical_semidirect_product() {
        let spec = RadicalSpec::new(vec![2]);
        let algebra = assemble(&spec, &BracketTable::default()).unwrap();
        assert_eq!(algebra.sc.dim(), 6);
        let (ok, _) = algebra.sc.is_lie_algebra();
        assert!(ok);
        // The radical block is abelian.
        for s in 3..6 {
            for t in (s + 1)..6 {
                assert!(vec_is_zero(algebra.sc.bracket_basis(s, t)));
            }
        }
    }

    #[test]
    fn odd_modules_force_abelian_radical() {
        // Any bracket between odd-weight modules targets an odd module in
        // vain: the target weight is never in the (even) decomposition.
        let spec = RadicalSpec::new(vec![1, 1, 1]);
        for (i, j, t) in [(0, 0, 1), (0, 1, 2), (1, 2, 0)] {
            let table = BracketTable::from_targets(&[(i, j, t)]);
            assert!(assemble(&spec, &table).is_err());
        }
    }

    #[test]
    fn symmetric_diagonal_slot_is_rejected() {
        // 4 lies in S^2 V_2 but not in Lambda^2 V_2.
        let spec = RadicalSpec::new(vec![2, 4]);
        let table = BracketTable::from_targets(&[(0, 0, 1)]);
        assert!(matches!(
            assemble(&spec, &table),
            Err(Error::SymmetricSlot { i: 0, weight: 4 })
        ));
    }

    #[test]
    fn incompatible_target_is_rejected() {
        let spec = RadicalSpec::new(vec![2, 2, 6]);
        let table = BracketTable::from_targets(&[(0, 1, 2)]);
        assert!(matches!(
            assemble(&spec, &table),
            Err(Error::IncompatibleTarget { .. })
        ));
    }

    #[test]
    fn benayadi25_basics() {
        let g = build_benayadi25();
        assert_eq!(g.sc.dim(), 25);
        assert_eq!(g.layout.module_offsets, vec![3, 10, 15, 22]);
        let (ok, _) = g.sc.is_lie_algebra();
        assert!(ok);
        assert!(g.sc.center().is_zero());
        assert!(g.sc.is_perfect());
        assert!(parity_signature(&g.spec, &g.table).is_empty());
    }

    #[test]
    fn parity_report_flags_mod2_failures() {
        let spec = RadicalSpec::new(vec![2, 3, 2]);
        let table = BracketTable::from_targets(&[(0, 1, 2), (1, 1, 0)]);
        let report = parity_signature(&spec, &table);
        assert_eq!(
            report,
            vec![ParityViolation { i: 0, j: 1, target: 2 }]
        );
    }

    #[test]
    fn sl2_action_block_is_the_module_action() {
        let g = build_benayadi25();
        // [H, v] on the first V_6 block: weights 6, 4, ..., -6.
        for j in 0..7 {
            let b = g.sc.bracket_basis(0, 3 + j);
            assert_eq!(b[3 + j], Rational::from_int(6 - 2 * j as i64));
        }
        // [g_L, V_{n_i}] = V_{n_i} for every nontrivial module.
        for (mi, &n) in g.spec.weights.iter().enumerate() {
            let off = g.layout.module_offsets[mi];
            let mut images = Vec::new();
            for x in 0..3 {
                for j in 0..=n {
                    let v = g.sc.bracket_basis(x, off + j).clone();
                    if !vec_is_zero(&v) {
                        images.push(v);
                    }
                }
            }
            let span = crate::lie::Subspace::from_spanning(g.sc.dim(), &images);
            assert_eq!(span.dim(), n + 1);
        }
    }
}
