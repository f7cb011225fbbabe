//! Lie algebras over ℚ given by structure constants, and the structural
//! invariants the rest of the crate consumes: brackets, Jacobi validation,
//! centers, adjoint representations, derivation algebras, and the outer
//! algebra `out(h) = der(h)/ad(h)` with its action on the center.

mod algebra;
mod map;
mod outer;
mod repr;

use thiserror::Error;

pub use algebra::LieAlgebra;
pub use map::LinearMap;
pub use outer::OuterAlgebra;
pub use repr::Representation;

/// Construction or validation failure in the Lie-algebra layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("Jacobi identity fails in `{name}` on basis triples {triples:?}")]
    Jacobi { name: String, triples: Vec<(usize, usize, usize)> },
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("structure constant pair ({i},{j}) must satisfy i < j < {dim}")]
    BadStructurePair { i: usize, j: usize, dim: usize },
    #[error("structure coefficient vector has length {found}, expected {expected}")]
    CoefficientLength { expected: usize, found: usize },
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not an ideal: bracket of basis vector {basis_index} with e_{bracket_with} escapes")]
    NotAnIdeal { basis_index: usize, bracket_with: usize },
    #[error("action is not a homomorphism: fails on basis pair ({i},{j})")]
    NotAHomomorphism { i: usize, j: usize },
    #[error("matrix is not a derivation of `{name}`")]
    NotADerivation { name: String },
}
