//! Canonical subspaces and quotient spaces with chosen representatives.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::{vec_is_zero, vec_zero, Rat};

/// A linear subspace of ℚⁿ held in reduced row echelon form.
///
/// The stored basis is the unique RREF basis of the subspace, so two
/// subspaces are equal as sets exactly when their `Subspace` values compare
/// equal — membership questions elsewhere in the crate (lift-independence,
/// class equality) reduce to plain `==` or [`Subspace::contains`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of arbitrary vectors, canonicalized by row reduction.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rat>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "spanning vector has wrong length");
        }
        let (red, pivots) = Matrix::from_rows(vectors).rref();
        let basis = (0..pivots.len()).map(|i| red.row(i)).collect();
        Subspace { ambient_dim, basis, pivots }
    }

    /// The zero subspace of ℚⁿ.
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    /// All of ℚⁿ.
    pub fn full(ambient_dim: usize) -> Self {
        Subspace::span(ambient_dim, (0..ambient_dim).map(|i| unit(ambient_dim, i)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical (RREF) basis vectors.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Pivot coordinate of each basis vector, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating all pivot coordinates against the
    /// basis. The remainder is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient_dim, "vector has wrong length");
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &c * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Coefficients of `v` in the canonical basis, or `None` when `v` lies
    /// outside the subspace. With an RREF basis the coefficient of the `i`-th
    /// basis vector is just `v[pivots[i]]`.
    pub fn coordinates_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Smallest subspace containing both.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.clone());
        Subspace::span(self.ambient_dim, vectors)
    }

    /// Vectors from this subspace's canonical basis that extend `sub` to a
    /// basis of `self` (greedy in stored order, hence deterministic).
    /// Panics unless `sub ⊆ self`.
    pub fn extension_of(&self, sub: &Subspace) -> Vec<Vec<Rat>> {
        assert!(sub.is_subspace_of(self), "sub is not contained in self");
        let mut acc = sub.clone();
        let mut chosen = Vec::new();
        for b in &self.basis {
            if !acc.contains(b) {
                chosen.push(b.clone());
                acc = acc.sum(&Subspace::span(self.ambient_dim, vec![b.clone()]));
            }
        }
        chosen
    }
}

/// The quotient ℚⁿ / sub with a fixed choice of representatives.
///
/// Representatives are the unit vectors at the non-pivot coordinates of
/// `sub`, and the projection is the linear map that eliminates the pivot
/// coordinates; projecting a representative gives the matching quotient unit
/// vector, and the projection kills `sub` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    sub: Subspace,
    representatives: Vec<Vec<Rat>>,
    projection: Matrix,
}

impl Quotient {
    pub fn new(ambient_dim: usize, sub: Subspace) -> Self {
        assert_eq!(sub.ambient_dim(), ambient_dim, "ambient dimension mismatch");
        let free: Vec<usize> = (0..ambient_dim).filter(|c| !sub.pivots().contains(c)).collect();
        let representatives: Vec<Vec<Rat>> = free.iter().map(|&f| unit(ambient_dim, f)).collect();
        // project(v) reads off the non-pivot coordinates of the remainder
        // sub.reduce(v); assembled column by column it is a dense matrix.
        let mut projection = Matrix::zeros(free.len(), ambient_dim);
        for (j, &f) in free.iter().enumerate() {
            projection.set(j, f, Rat::one());
        }
        for (b, &p) in sub.basis().iter().zip(sub.pivots()) {
            for (j, &f) in free.iter().enumerate() {
                projection.set(j, p, -b[f].clone());
            }
        }
        Quotient { sub, representatives, projection }
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn representatives(&self) -> &[Vec<Rat>] {
        &self.representatives
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        self.projection.mul_vec(v)
    }

    pub fn projection_matrix(&self) -> &Matrix {
        &self.projection
    }

    /// The representative of given quotient coordinates.
    pub fn lift(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim(), "quotient coordinate length mismatch");
        let mut v = vec_zero(self.ambient_dim());
        for (c, rep) in coords.iter().zip(&self.representatives) {
            for (x, y) in v.iter_mut().zip(rep) {
                *x += c * y;
            }
        }
        v
    }
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec_zero(n);
    v[i] = Rat::one();
    v
}
