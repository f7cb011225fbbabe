//! Exact rational linear algebra: the kernel every other module reduces to.
//!
//! Scalars are arbitrary-precision rationals ([`Rat`]); matrices are dense and
//! row-major. Subspaces are kept in reduced row echelon form so that two equal
//! subspaces always have byte-identical stored bases — subspace equality,
//! membership, and quotient constructions are then direct comparisons instead
//! of rank arguments. Dimensions stay small (≤ a few thousand columns for
//! cochain spaces), so dense storage wins over sparse bookkeeping.

mod matrix;
mod subspace;

use thiserror::Error;

pub use matrix::{Matrix, Solution};
pub use subspace::{Quotient, Subspace};

/// Exact rational scalar used everywhere in this crate. No floating point
/// exists in any code path: every identity tested here is an exact polynomial
/// identity in structure constants, and a tolerance would turn classification
/// answers into guesses.
pub type Rat = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// The fraction `n/d` as an exact rational. Panics if `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Shape violation in a linear-algebra operation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// The zero vector of length `n`.
pub fn vec_zero(n: usize) -> Vec<Rat> {
    vec![Rat::from_integer(0.into()); n]
}

/// Componentwise sum. Panics on length mismatch (programmer error).
pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference. Panics on length mismatch.
pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scalar multiple `c·a`.
pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

/// In-place `a += c·b`. Panics on length mismatch.
pub fn vec_add_scaled(a: &mut [Rat], c: &Rat, b: &[Rat]) {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    for (x, y) in a.iter_mut().zip(b) {
        *x += c * y;
    }
}

/// True iff every component is zero.
pub fn vec_is_zero(a: &[Rat]) -> bool {
    use num_traits::Zero;
    a.iter().all(|x| x.is_zero())
}
