//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a valid rational: {0:?}")]
    InvalidRational(String),

    #[error("matrix is singular (rank {rank} < {size})")]
    SingularMatrix { rank: usize, size: usize },

    #[error("block {index} of block-diagonal matrix is singular")]
    SingularBlock { index: usize },

    #[error("dimension mismatch: {0}")]
    ShapeMismatch(String),

    #[error("weight {k} does not occur in the decomposition of {space}")]
    WeightAbsent { k: usize, space: String },

    #[error("tensor factors must be ordered n >= m, got n={n}, m={m}")]
    ArgumentOrder { n: usize, m: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error(
        "bracket [V_{i}, V_{j}] cannot land in module {target}: \
         weight {weight} is not in the decomposition of the pair"
    )]
    IncompatibleTarget {
        i: usize,
        j: usize,
        target: usize,
        weight: usize,
    },

    #[error(
        "diagonal bracket [V_{i}, V_{i}] needs an antisymmetric slot, \
         but weight {weight} lies in the symmetric square"
    )]
    SymmetricSlot { i: usize, weight: usize },

    #[error("structure constants violate the Jacobi identity (first failure at pair ({i}, {j}))")]
    NotALieAlgebra { i: usize, j: usize },

    #[error("invalid bracket table: {0}")]
    InvalidTable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Short machine-readable tag for structured CLI error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRational(_) => "invalid_rational",
            Error::SingularMatrix { .. } => "singular_matrix",
            Error::SingularBlock { .. } => "singular_block",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::WeightAbsent { .. } => "weight_absent",
            Error::ArgumentOrder { .. } => "argument_order",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::IncompatibleTarget { .. } => "incompatible_target",
            Error::SymmetricSlot { .. } => "symmetric_slot",
            Error::NotALieAlgebra { .. } => "not_a_lie_algebra",
            Error::InvalidTable(_) => "invalid_table",
            Error::InvalidInput(_) => "invalid_input",
        }
    }
}
