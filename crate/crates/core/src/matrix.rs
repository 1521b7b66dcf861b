//! Dense matrices and vectors over the exact rationals.
//!
//! Kernels, ranks and inverses are computed by Gauss-Jordan elimination with
//! exact arithmetic. Kernel bases come out echelon-normalized (each basis
//! vector carries a unit entry in "its" free column and zeros in the free
//! columns of the others, ordered by free column), so results are canonical
//! and directly comparable across runs.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// A coordinate vector with exact rational entries.
pub type RationalVector = Vec<Rational>;

pub fn vec_zero(len: usize) -> RationalVector {
    vec![Rational::zero(); len]
}

pub fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> RationalVector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> RationalVector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], c: &Rational) -> RationalVector {
    a.iter().map(|x| x * c).collect()
}

/// Scale a rational vector to integer entries with gcd 1 and a positive
/// final nonzero coordinate. Returns the zero vector unchanged.
///
/// This is the normalization used for highest-weight vectors: it reproduces
/// hand-written forms such as `-e0^e3 + 2 e1^e2` exactly.
pub fn integer_normalize(v: &[Rational]) -> RationalVector {
    let mut denom_lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            denom_lcm = denom_lcm.lcm(x.denom());
        }
    }
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for n in &scaled {
        gcd = gcd.gcd(n);
    }
    if gcd.is_zero() {
        return v.to_vec();
    }
    let flip = scaled
        .iter()
        .rev()
        .find(|n| !n.is_zero())
        .map(|n| n.is_negative())
        .unwrap_or(false);
    scaled
        .into_iter()
        .map(|n| {
            let n = &n / &gcd;
            Rational::from_bigint(if flip { -n } else { n })
        })
        .collect()
}

/// Dense row-major matrix of [`Rational`] entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<RationalVector>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Parse integer literals row by row; test convenience.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> RationalVector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(r, c)] += &prod;
                    }
                }
            }
        }
        out
    }

    /// `self * self.commutator(rhs)` helper: `AB - BA`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> RationalVector {
        assert_eq!(self.cols, v.len());
        let mut out = vec_zero(self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = &self[(r, c)];
                if !a.is_zero() && !v[c].is_zero() {
                    let prod = a * &v[c];
                    out[r] += &prod;
                }
            }
        }
        out
    }

    pub fn flatten(&self) -> RationalVector {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: RationalVector) -> Self {
        assert_eq!(data.len(), rows * cols);
        RationalMatrix { rows, cols, data }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(src, pivot_row);
            let inv = m[(pivot_row, col)].recip();
            for c in col..m.cols {
                let v = &m[(pivot_row, c)] * &inv;
                m[(pivot_row, c)] = v;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for c in col..m.cols {
                        let v = &m[(pivot_row, c)] * &factor;
                        m[(r, c)] -= &v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Echelon-normalized basis of the right null space, ordered by free
    /// column. Empty when the kernel is trivial.
    pub fn kernel_basis(&self) -> Vec<RationalVector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, col) in pivots.iter().copied().enumerate() {
            pivot_of_col[col] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec_zero(self.cols);
            v[free] = Rational::one();
            for (row, col) in pivots.iter().copied().enumerate() {
                v[col] = -&r[(row, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse. Errors when the matrix is not square or singular.
    pub fn invert(&self) -> Result<Self, Error> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = RationalMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        let (reduced, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::SingularMatrix {
                rank: pivots.iter().filter(|&&p| p < n).count(),
                size: n,
            });
        }
        Ok(Self::from_fn(n, n, |r, c| reduced[(r, n + c)].clone()))
    }

    /// Inverse of the block-diagonal matrix assembled from `blocks`,
    /// without ever forming the full matrix. The failing block index is
    /// reported when a block is singular.
    pub fn block_diagonal_invert(blocks: &[RationalMatrix]) -> Result<Self, Error> {
        let total: usize = blocks.iter().map(|b| b.rows()).sum();
        let mut out = Self::zeros(total, total);
        let mut offset = 0;
        for (index, block) in blocks.iter().enumerate() {
            let inv = block
                .invert()
                .map_err(|_| Error::SingularBlock { index })?;
            for r in 0..inv.rows() {
                for c in 0..inv.cols() {
                    out[(offset + r, offset + c)] = inv[(r, c)].clone();
                }
            }
            offset += block.rows();
        }
        Ok(out)
    }

    /// Assemble a block-diagonal matrix; companion to
    /// [`RationalMatrix::block_diagonal_invert`].
    pub fn block_diagonal(blocks: &[RationalMatrix]) -> Self {
        let total: usize = blocks.iter().map(|b| b.rows()).sum();
        let mut out = Self::zeros(total, total);
        let mut offset = 0;
        for block in blocks {
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    out[(offset + r, offset + c)] = block[(r, c)].clone();
                }
            }
            offset += block.rows();
        }
        out
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self[(r, c)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Canonical reduced-echelon basis for the span of a set of row vectors.
pub fn row_space_basis(vectors: &[RationalVector]) -> Vec<RationalVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RationalMatrix::from_rows(vectors.to_vec());
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Incremental sparse row echelon over the rationals.
///
/// Suited to large homogeneous systems whose rows touch only a few unknowns
/// (equivariance constraints, weight-graded derivation blocks). Rows are
/// reduced against existing pivots on insertion; the kernel extraction does
/// a final back-substitution pass.
pub struct SparseEchelon {
    cols: usize,
    /// pivot column -> row, stored with a unit pivot entry.
    rows: std::collections::BTreeMap<usize, Vec<(usize, Rational)>>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            rows: std::collections::BTreeMap::new(),
        }
    }

    /// Insert one constraint row (sparse, sorted by column). Returns true
    /// when the row increased the rank.
    pub fn insert(&mut self, mut row: Vec<(usize, Rational)>) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|&(c, _)| c);
        loop {
            let Some(&(lead, ref coeff)) = row.first() else {
                return false;
            };
            let coeff = coeff.clone();
            match self.rows.get(&lead) {
                Some(pivot_row) => {
                    row = sparse_axpy(&row, &-coeff, pivot_row);
                }
                None => {
                    let inv = coeff.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rows.len()
    }

    /// Echelon-normalized kernel basis, ordered by free column.
    pub fn kernel_basis(&mut self) -> Vec<RationalVector> {
        self.back_substitute();
        let pivot_cols: Vec<usize> = self.rows.keys().copied().collect();
        let is_pivot: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot.contains(&free) {
                continue;
            }
            let mut v = vec_zero(self.cols);
            v[free] = Rational::one();
            for (&p, row) in &self.rows {
                if let Some((_, coeff)) = row.iter().find(|&&(c, _)| c == free) {
                    v[p] = -coeff;
                }
            }
            basis.push(v);
        }
        basis
    }

    fn back_substitute(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let row = self.rows[&p].clone();
            let earlier: Vec<usize> = pivots.iter().copied().filter(|&q| q < p).collect();
            for q in earlier {
                let target = self.rows.get_mut(&q).unwrap();
                if let Some((_, coeff)) = target.iter().find(|&&(c, _)| c == p) {
                    let coeff = coeff.clone();
                    *target = sparse_axpy(target, &-coeff, &row);
                }
            }
        }
    }
}

fn sparse_axpy(
    a: &[(usize, Rational)],
    scale: &Rational,
    b: &[(usize, Rational)],
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                if ca == cb {
                    let v = va + &(scale * vb);
                    if !v.is_zero() {
                        out.push((ca, v));
                    }
                    i += 1;
                    j += 1;
                } else if ca < cb {
                    out.push((ca, va.clone()));
                    i += 1;
                } else {
                    let v = scale * vb;
                    if !v.is_zero() {
                        out.push((cb, v));
                    }
                    j += 1;
                }
            }
            (Some(&(ca, ref va)), None) => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (None, Some(&(cb, ref vb))) => {
                let v = scale * vb;
                if !v.is_zero() {
                    out.push((cb, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn kernel_of_zero_map() {
        let m = RationalMatrix::zeros(2, 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![q(1, 1), q(0, 1)]);
        assert_eq!(k[1], vec![q(0, 1), q(1, 1)]);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(RationalMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_rank_one() {
        // Row reduction by hand: [[1,2],[2,4]] ~ [[1,2],[0,0]], kernel (-2, 1).
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![q(-2, 1), q(1, 1)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn invert_examples() {
        let id = RationalMatrix::identity(3);
        assert_eq!(id.invert().unwrap(), id);

        let d = RationalMatrix::from_i64(&[&[2, 0], &[0, 4]]);
        let dinv = d.invert().unwrap();
        assert_eq!(dinv[(0, 0)], q(1, 2));
        assert_eq!(dinv[(1, 1)], q(1, 4));

        // Product check for the unipotent example: [[1,1],[0,1]]^-1 = [[1,-1],[0,1]].
        let u = RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let uinv = u.invert().unwrap();
        assert_eq!(uinv, RationalMatrix::from_i64(&[&[1, -1], &[0, 1]]));
        assert_eq!(u.mul(&uinv), RationalMatrix::identity(2));

        let s = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(
            s.invert(),
            Err(Error::SingularMatrix { rank: 1, size: 2 })
        ));
    }

    #[test]
    fn block_inverse_matches_full_inverse() {
        let blocks = vec![
            RationalMatrix::from_i64(&[&[2]]),
            RationalMatrix::from_i64(&[&[1, 1], &[0, 3]]),
            RationalMatrix::from_i64(&[&[5]]),
        ];
        let full = RationalMatrix::block_diagonal(&blocks);
        let by_blocks = RationalMatrix::block_diagonal_invert(&blocks).unwrap();
        assert_eq!(by_blocks, full.invert().unwrap());

        let single = vec![RationalMatrix::from_i64(&[&[1, 2], &[3, 4]])];
        assert_eq!(
            RationalMatrix::block_diagonal_invert(&single).unwrap(),
            single[0].invert().unwrap()
        );

        let diag = vec![
            RationalMatrix::from_i64(&[&[2]]),
            RationalMatrix::from_i64(&[&[3]]),
        ];
        let inv = RationalMatrix::block_diagonal_invert(&diag).unwrap();
        assert_eq!(inv[(0, 0)], q(1, 2));
        assert_eq!(inv[(1, 1)], q(1, 3));

        let bad = vec![
            RationalMatrix::identity(1),
            RationalMatrix::zeros(2, 2),
        ];
        assert!(matches!(
            RationalMatrix::block_diagonal_invert(&bad),
            Err(Error::SingularBlock { index: 1 })
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(RationalMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn integer_normalize_forms() {
        let v = vec![q(1, 1), q(-5, 3), q(2, 1)];
        assert_eq!(integer_normalize(&v), vec![q(3, 1), q(-5, 1), q(6, 1)]);
        // Sign fixed by the last nonzero coordinate.
        let w = vec![q(1, 2), q(-1, 1), q(0, 1)];
        assert_eq!(integer_normalize(&w), vec![q(-1, 1), q(2, 1), q(0, 1)]);
    }

    #[test]
    fn sparse_echelon_matches_dense_kernel() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let mut se = SparseEchelon::new(3);
        for r in 0..3 {
            let row: Vec<(usize, Rational)> = (0..3)
                .map(|c| (c, m[(r, c)].clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            se.insert(row);
        }
        assert_eq!(se.kernel_basis(), m.kernel_basis());
    }
}
