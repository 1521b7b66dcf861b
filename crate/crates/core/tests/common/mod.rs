//! Shared test oracles and generators, independent of the production paths
//! they cross-check.

#![allow(dead_code)]

use rand::Rng;
use sympalg::lie::{heisenberg_structure_constants, sl2_structure_constants, StructureConstants};
use sympalg::matrix::{vec_is_zero, RationalMatrix, RationalVector};
use sympalg::rational::Rational;
use sympalg::semidirect::{assemble, BracketTable, RadicalSpec};

/// Brute-force Jacobi oracle: evaluate
/// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] over all i < j < k.
/// Triples with repeated indices vanish by antisymmetry alone.
pub fn jacobi_oracle(sc: &StructureConstants) -> bool {
    let d = sc.dim();
    for i in 0..d {
        for j in (i + 1)..d {
            for k in (j + 1)..d {
                if !vec_is_zero(&sc.jacobiator(i, j, k)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.random_range(-3..=3);
    let den = rng.random_range(1..=2);
    Rational::new(num, den)
}

pub fn random_vector(rng: &mut impl Rng, len: usize) -> RationalVector {
    (0..len).map(|_| random_rational(rng)).collect()
}

/// A random antisymmetric structure tensor; usually not a Lie algebra.
pub fn random_antisymmetric(rng: &mut impl Rng, dim: usize) -> StructureConstants {
    let mut sc = StructureConstants::zero(dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            sc.set_bracket(i, j, random_vector(rng, dim));
        }
    }
    sc
}

/// A random invertible matrix with small integer entries.
pub fn random_invertible(rng: &mut impl Rng, dim: usize) -> RationalMatrix {
    loop {
        let m = RationalMatrix::from_fn(dim, dim, |_, _| {
            Rational::from_int(rng.random_range(-2..=2))
        });
        if m.rank() == dim {
            return m;
        }
    }
}

/// Direct sum placing `b` after `a`.
pub fn direct_sum(a: &StructureConstants, b: &StructureConstants) -> StructureConstants {
    let (da, db) = (a.dim(), b.dim());
    let mut sc = StructureConstants::zero(da + db);
    for (i, j, v) in a.upper_brackets() {
        let mut long = sympalg::matrix::vec_zero(da + db);
        long[..da].clone_from_slice(&v);
        sc.set_bracket(i, j, long);
    }
    for (i, j, v) in b.upper_brackets() {
        let mut long = sympalg::matrix::vec_zero(da + db);
        long[da..].clone_from_slice(&v);
        sc.set_bracket(da + i, da + j, long);
    }
    sc
}

/// The 2-dimensional solvable algebra [x, y] = y.
pub fn solvable2() -> StructureConstants {
    let mut sc = StructureConstants::zero(2);
    sc.set_bracket(0, 1, vec![Rational::zero(), Rational::one()]);
    sc
}

/// A genuine Lie algebra of the requested dimension (2..=8) in a random
/// basis: a known algebra padded with an abelian summand, then conjugated.
pub fn random_lie_algebra(rng: &mut impl Rng, dim: usize) -> StructureConstants {
    assert!((2..=8).contains(&dim));
    let mut pool: Vec<StructureConstants> = vec![StructureConstants::zero(dim)];
    let mut add_padded = |base: StructureConstants| {
        if base.dim() == dim {
            pool.push(base);
        } else if base.dim() < dim {
            pool.push(direct_sum(&base, &StructureConstants::zero(dim - base.dim())));
        }
    };
    add_padded(solvable2());
    add_padded(heisenberg_structure_constants());
    add_padded(sl2_structure_constants());
    if dim >= 6 {
        // sl2 acting on an irreducible abelian radical.
        let spec = RadicalSpec::new(vec![dim - 4]);
        add_padded(assemble(&spec, &BracketTable::default()).unwrap().sc);
    }
    if dim >= 5 {
        add_padded(direct_sum(&solvable2(), &heisenberg_structure_constants()));
    }
    let base = pool[rng.random_range(0..pool.len())].clone();
    let p = random_invertible(rng, dim);
    base.change_of_basis(&p).unwrap()
}
