//! Exact-arithmetic workbench for the representation theory of sl2(C) and
//! the classification of low-dimensional sympathetic Lie algebras.
//!
//! The crate builds the irreducible sl2(C)-modules V_n with explicit rational
//! generator matrices, decomposes tensor/symmetric/exterior squares into
//! simple summands, constructs the (unique up to scale) equivariant morphisms
//! between them, assembles candidate Lie algebras sl2(C) x| h from
//! multiplication tables, and runs the verification toolkit (Jacobi, center,
//! derived series, derivation algebra, sympathy) needed to single out the
//! 25-dimensional sympathetic Lie algebra with Levi factor sl2(C).
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals and
//! every result is reproducible bit for bit.

pub mod classify;
pub mod clebsch;
pub mod derivations;
pub mod equivariant;
pub mod error;
pub mod lie;
pub mod matrix;
pub mod rational;
pub mod schema;
pub mod semidirect;
pub mod sl2;

pub use error::Error;
pub use matrix::{RationalMatrix, RationalVector};
pub use rational::Rational;
