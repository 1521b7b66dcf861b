//! Clebsch-Gordan decompositions and explicit submodule bases.
//!
//! For n >= m the tensor product decomposes as
//! V_n (x) V_m = V_{n+m} + V_{n+m-2} + ... + V_{n-m}, and for n = m the two
//! halves split off as Lambda^2 V_n = sum of V_{2n+2-4i} (i >= 1) and
//! S^2 V_n = sum of V_{2n-4j} (j >= 0). Each summand is realized inside the
//! product space by its highest-weight vector u_k (the weight-k kernel of the
//! raising operator) together with the lowering chain u_k, F u_k, ..., F^k u_k.

use serde::Serialize;

use crate::error::Error;
use crate::matrix::{integer_normalize, RationalMatrix, RationalVector};
use crate::sl2::{ProductSpace, ProductSpaceKind};

/// Multiset of highest weights of the simple summands, descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub weights: Vec<usize>,
}

impl Decomposition {
    pub fn contains(&self, k: usize) -> bool {
        self.weights.contains(&k)
    }

    /// Total dimension of the decomposed space.
    pub fn dim(&self) -> usize {
        self.weights.iter().map(|&k| k + 1).sum()
    }
}

/// V_n (x) V_m = V_{n+m} + V_{n+m-2} + ... + V_{n-m}. Callers must order the
/// factors so that n >= m.
pub fn decompose_tensor(n: usize, m: usize) -> Result<Decomposition, Error> {
    if n < m {
        return Err(Error::ArgumentOrder { n, m });
    }
    Ok(Decomposition {
        weights: (0..=m).map(|i| n + m - 2 * i).collect(),
    })
}

/// Lambda^2 V_n = sum over i >= 1 of V_{(2n+2)-4i}.
pub fn decompose_wedge2(n: usize) -> Decomposition {
    Decomposition {
        weights: (1..=(n + 1) / 2).map(|i| 2 * n + 2 - 4 * i).collect(),
    }
}

/// S^2 V_n = sum over j >= 0 of V_{2n-4j}.
pub fn decompose_sym2(n: usize) -> Decomposition {
    Decomposition {
        weights: (0..=n / 2).map(|j| 2 * n - 4 * j).collect(),
    }
}

/// Decomposition of any product space (tensor factors sorted internally).
pub fn decompose_space(kind: ProductSpaceKind) -> Decomposition {
    match kind {
        ProductSpaceKind::Tensor { n, m } => {
            decompose_tensor(n.max(m), n.min(m)).expect("sorted factors")
        }
        ProductSpaceKind::Sym2 { n } => decompose_sym2(n),
        ProductSpaceKind::Wedge2 { n } => decompose_wedge2(n),
    }
}

/// The chain basis of the simple submodule of highest weight `k`.
#[derive(Debug, Clone, Serialize)]
pub struct SubmoduleBasis {
    pub k: usize,
    /// k+1 vectors: u_k, F u_k, ..., F^k u_k, in ambient coordinates.
    pub vectors: Vec<RationalVector>,
}

/// The highest-weight vector of weight `k` inside a product space: the
/// one-dimensional kernel of the raising operator restricted to the weight-k
/// subspace, scaled to integer entries with gcd 1 and positive final nonzero
/// coordinate.
pub fn highest_weight_vector(space: &ProductSpace, k: usize) -> Result<RationalVector, Error> {
    if !decompose_space(space.kind).contains(k) {
        return Err(Error::WeightAbsent {
            k,
            space: space.kind.to_string(),
        });
    }
    let kw = k as i64;
    let weight_indices: Vec<usize> = (0..space.dim())
        .filter(|&b| space.weights[b] == kw)
        .collect();
    let above_indices: Vec<usize> = (0..space.dim())
        .filter(|&b| space.weights[b] == kw + 2)
        .collect();

    // E maps the weight-k subspace into the weight-(k+2) subspace; its
    // restriction is the only block that matters. An empty image space means
    // k is the top weight and the weight space itself is the kernel.
    let restricted = RationalMatrix::from_fn(above_indices.len(), weight_indices.len(), |r, c| {
        space.mat_e[(above_indices[r], weight_indices[c])].clone()
    });
    let kernel = restricted.kernel_basis();
    assert_eq!(
        kernel.len(),
        1,
        "weight {k} must occur with multiplicity one in {}",
        space.kind
    );
    let mut full = crate::matrix::vec_zero(space.dim());
    for (pos, &b) in weight_indices.iter().enumerate() {
        full[b] = kernel[0][pos].clone();
    }
    Ok(integer_normalize(&full))
}

/// The chain u_k, F u_k, ..., F^k u_k spanning the simple submodule V_k.
pub fn submodule_basis(space: &ProductSpace, k: usize) -> Result<SubmoduleBasis, Error> {
    let top = highest_weight_vector(space, k)?;
    let mut vectors = Vec::with_capacity(k + 1);
    vectors.push(top);
    for _ in 0..k {
        let next = space.mat_f.mul_vec(vectors.last().unwrap());
        vectors.push(next);
    }
    Ok(SubmoduleBasis { k, vectors })
}

/// All submodule chains of a product space, in descending weight order.
/// Their concatenation is a basis of the whole space.
pub fn all_chains(space: &ProductSpace) -> Vec<SubmoduleBasis> {
    decompose_space(space.kind)
        .weights
        .iter()
        .map(|&k| submodule_basis(space, k).expect("weight from own decomposition"))
        .collect()
}
