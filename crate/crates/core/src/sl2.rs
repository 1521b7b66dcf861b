//! Explicit matrices for the irreducible representations of sl2(C) and the
//! induced actions on tensor, symmetric and exterior squares.
//!
//! The simple module V_n has basis e_0..e_n with
//!
//! ```text
//! H e_i = (n - 2i) e_i,   F e_i = e_{i+1},   E e_i = i (n + 1 - i) e_{i-1},
//! ```
//!
//! and the convention e_{-1} = e_{n+1} = 0. Product spaces carry the Leibniz
//! action (x.(u (x) w) = x.u (x) w + u (x) x.w); the symmetric and exterior
//! squares are obtained by embedding their bases into the tensor square and
//! projecting, so the tensor action is the single source of truth.

use std::fmt;

use crate::matrix::{RationalMatrix, RationalVector};
use crate::rational::Rational;

/// The standard sl2(C) basis: [H,E] = 2E, [H,F] = -2F, [E,F] = H.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    H,
    E,
    F,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::H, Generator::E, Generator::F];
}

/// Generator matrices of the irreducible representation of highest weight `n`.
#[derive(Debug, Clone)]
pub struct IrrepAction {
    pub n: usize,
    pub mat_h: RationalMatrix,
    pub mat_e: RationalMatrix,
    pub mat_f: RationalMatrix,
}

impl IrrepAction {
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn mat(&self, g: Generator) -> &RationalMatrix {
        match g {
            Generator::H => &self.mat_h,
            Generator::E => &self.mat_e,
            Generator::F => &self.mat_f,
        }
    }
}

/// The irreducible representation rho_n on V_n, as exact matrices acting on
/// column coordinate vectors in the basis e_0..e_n.
pub fn irrep(n: usize) -> IrrepAction {
    let d = n + 1;
    let mut h = RationalMatrix::zeros(d, d);
    let mut e = RationalMatrix::zeros(d, d);
    let mut f = RationalMatrix::zeros(d, d);
    for i in 0..d {
        h[(i, i)] = Rational::from_int(n as i64 - 2 * i as i64);
        if i + 1 < d {
            f[(i + 1, i)] = Rational::one();
        }
        if i >= 1 {
            e[(i - 1, i)] = Rational::from_int((i as i64) * (n as i64 + 1 - i as i64));
        }
    }
    IrrepAction {
        n,
        mat_h: h,
        mat_e: e,
        mat_f: f,
    }
}

/// Which product of simple modules a [`ProductSpace`] models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductSpaceKind {
    /// V_n (x) V_m with basis e_i (x) f_j, ordered lexicographically by (i, j).
    Tensor { n: usize, m: usize },
    /// S^2 V_n with basis e_i . e_j for i <= j (e_i.e_j = e_i(x)e_j + e_j(x)e_i
    /// when i < j, and e_i.e_i = e_i(x)e_i).
    Sym2 { n: usize },
    /// Lambda^2 V_n with basis e_i ^ e_j = e_i(x)e_j - e_j(x)e_i for i < j.
    Wedge2 { n: usize },
}

impl ProductSpaceKind {
    pub fn dim(&self) -> usize {
        match *self {
            ProductSpaceKind::Tensor { n, m } => (n + 1) * (m + 1),
            ProductSpaceKind::Sym2 { n } => (n + 1) * (n + 2) / 2,
            ProductSpaceKind::Wedge2 { n } => (n + 1) * n / 2,
        }
    }
}

impl fmt::Display for ProductSpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ProductSpaceKind::Tensor { n, m } => write!(f, "tensor({n},{m})"),
            ProductSpaceKind::Sym2 { n } => write!(f, "sym2({n})"),
            ProductSpaceKind::Wedge2 { n } => write!(f, "wedge2({n})"),
        }
    }
}

/// A product of two simple modules with its labeled basis and the induced
/// generator action.
#[derive(Debug, Clone)]
pub struct ProductSpace {
    pub kind: ProductSpaceKind,
    /// Index pairs labeling the basis, in the fixed order described on
    /// [`ProductSpaceKind`].
    pub labels: Vec<(usize, usize)>,
    /// H-weight of each basis vector.
    pub weights: Vec<i64>,
    pub mat_h: RationalMatrix,
    pub mat_e: RationalMatrix,
    pub mat_f: RationalMatrix,
}

impl ProductSpace {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn mat(&self, g: Generator) -> &RationalMatrix {
        match g {
            Generator::H => &self.mat_h,
            Generator::E => &self.mat_e,
            Generator::F => &self.mat_f,
        }
    }

    /// Position of a basis label; panics on a label that is not in the basis.
    pub fn index_of(&self, i: usize, j: usize) -> usize {
        match self.kind {
            ProductSpaceKind::Tensor { m, .. } => i * (m + 1) + j,
            _ => self
                .labels
                .iter()
                .position(|&l| l == (i, j))
                .expect("label not in basis"),
        }
    }
}

/// Build the generator action on a tensor, symmetric or exterior square.
pub fn product_space(kind: ProductSpaceKind) -> ProductSpace {
    match kind {
        ProductSpaceKind::Tensor { n, m } => tensor_space(n, m),
        ProductSpaceKind::Sym2 { n } => squared_space(kind, n, false),
        ProductSpaceKind::Wedge2 { n } => squared_space(kind, n, true),
    }
}

fn tensor_space(n: usize, m: usize) -> ProductSpace {
    let rho_n = irrep(n);
    let rho_m = irrep(m);
    let dim = (n + 1) * (m + 1);
    let mut labels = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for i in 0..=n {
        for j in 0..=m {
            labels.push((i, j));
            weights.push((n as i64 - 2 * i as i64) + (m as i64 - 2 * j as i64));
        }
    }
    let act = |g: Generator| -> RationalMatrix {
        let a = rho_n.mat(g);
        let b = rho_m.mat(g);
        let mut out = RationalMatrix::zeros(dim, dim);
        // Leibniz rule: x.(e_i (x) f_j) = (x.e_i) (x) f_j + e_i (x) (x.f_j).
        for i in 0..=n {
            for j in 0..=m {
                let col = i * (m + 1) + j;
                for r in 0..=n {
                    if !a[(r, i)].is_zero() {
                        let row = r * (m + 1) + j;
                        out[(row, col)] = &out[(row, col)] + &a[(r, i)];
                    }
                }
                for s in 0..=m {
                    if !b[(s, j)].is_zero() {
                        let row = i * (m + 1) + s;
                        out[(row, col)] = &out[(row, col)] + &b[(s, j)];
                    }
                }
            }
        }
        out
    };
    ProductSpace {
        kind: ProductSpaceKind::Tensor { n, m },
        labels,
        weights,
        mat_h: act(Generator::H),
        mat_e: act(Generator::E),
        mat_f: act(Generator::F),
    }
}

/// Common construction for S^2 V_n and Lambda^2 V_n: embed each basis vector
/// into V_n (x) V_n, push it through the tensor action, and read the result
/// back in the (anti)symmetric basis.
fn squared_space(kind: ProductSpaceKind, n: usize, antisymmetric: bool) -> ProductSpace {
    let tensor = tensor_space(n, n);
    let mut labels = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            if antisymmetric && i == j {
                continue;
            }
            labels.push((i, j));
        }
    }
    let dim = labels.len();
    let weights: Vec<i64> = labels
        .iter()
        .map(|&(i, j)| 2 * n as i64 - 2 * (i + j) as i64)
        .collect();

    let embed = |&(i, j): &(usize, usize)| -> RationalVector {
        let mut v = crate::matrix::vec_zero(tensor.dim());
        v[tensor.index_of(i, j)] = Rational::one();
        if i != j {
            v[tensor.index_of(j, i)] = if antisymmetric {
                -Rational::one()
            } else {
                Rational::one()
            };
        }
        v
    };

    let act = |g: Generator| -> RationalMatrix {
        let mut out = RationalMatrix::zeros(dim, dim);
        for (col, label) in labels.iter().enumerate() {
            let image = tensor.mat(g).mul_vec(&embed(label));
            for (row, &(a, b)) in labels.iter().enumerate() {
                let coeff = image[tensor.index_of(a, b)].clone();
                if !coeff.is_zero() {
                    out[(row, col)] = coeff;
                }
            }
        }
        out
    };

    let mat_h = act(Generator::H);
    let mat_e = act(Generator::E);
    let mat_f = act(Generator::F);
    ProductSpace {
        kind,
        labels,
        weights,
        mat_h,
        mat_e,
        mat_f,
    }
}
