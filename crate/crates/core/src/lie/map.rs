//! Linear maps between based vector spaces.

use crate::linalg::{Matrix, Rat};

/// A linear map between two based rational vector spaces, stored as its
/// `codomain_dim × domain_dim` matrix. Sections of projections, equivalence
/// witnesses `b: g → h`, and lifts of outer actions all live here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn zero(domain_dim: usize, codomain_dim: usize) -> Self {
        LinearMap { matrix: Matrix::zeros(codomain_dim, domain_dim) }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: Matrix::identity(n) }
    }

    /// Build from the images of the domain basis vectors.
    pub fn from_images(codomain_dim: usize, images: Vec<Vec<Rat>>) -> Self {
        LinearMap { matrix: Matrix::from_cols(codomain_dim, images) }
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Image of the `i`-th domain basis vector.
    pub fn image_of_basis(&self, i: usize) -> Vec<Rat> {
        self.matrix.col(i)
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.add(&other.matrix) }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.sub(&other.matrix) }
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap { matrix: self.matrix.neg() }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}
