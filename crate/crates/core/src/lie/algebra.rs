//! Lie algebras presented by structure constants on a labeled basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{
    vec_add, vec_add_scaled, vec_is_zero, vec_zero, Matrix, Quotient, Rat, Subspace,
};

use super::{LieError, LinearMap, Representation};

/// A finite-dimensional Lie algebra over ℚ.
///
/// Only bracket pairs `(i, j)` with `i < j` are stored, so antisymmetry is
/// unviolable by construction; `[e_j, e_i]` is read off as the negation.
/// [`LieAlgebra::new`] validates the Jacobi identity up front — every
/// construction downstream (extensions, cohomology) presumes valid algebras,
/// so invalid tables fail fast at the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    basis_labels: Vec<String>,
    /// `(i, j) ↦ [e_i, e_j]` as a dense coefficient vector; absent pairs are
    /// zero brackets. Keys always satisfy `i < j`.
    structure: BTreeMap<(usize, usize), Vec<Rat>>,
}

impl LieAlgebra {
    /// Validating constructor: checks labels, table shape, and Jacobi.
    pub fn new(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        brackets: Vec<((usize, usize), Vec<Rat>)>,
    ) -> Result<Self, LieError> {
        let algebra = Self::new_unchecked(name, basis_labels, brackets)?;
        let triples = algebra.check_jacobi();
        if !triples.is_empty() {
            return Err(LieError::Jacobi { name: algebra.name, triples });
        }
        Ok(algebra)
    }

    /// Shape-checked but *not* Jacobi-checked constructor. Exists so that
    /// [`LieAlgebra::check_jacobi`] can be exercised on broken tables; all
    /// ordinary construction goes through [`LieAlgebra::new`].
    pub fn new_unchecked(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        brackets: Vec<((usize, usize), Vec<Rat>)>,
    ) -> Result<Self, LieError> {
        let dim = basis_labels.len();
        for (idx, label) in basis_labels.iter().enumerate() {
            if basis_labels[..idx].contains(label) {
                return Err(LieError::DuplicateLabel(label.clone()));
            }
        }
        let mut structure = BTreeMap::new();
        for ((i, j), coeffs) in brackets {
            if i >= j || j >= dim {
                return Err(LieError::BadStructurePair { i, j, dim });
            }
            if coeffs.len() != dim {
                return Err(LieError::CoefficientLength { expected: dim, found: coeffs.len() });
            }
            if structure.insert((i, j), coeffs).is_some() {
                return Err(LieError::BadStructurePair { i, j, dim });
            }
        }
        // Zero brackets are normalized away so equal algebras have equal tables.
        structure.retain(|_, v| !vec_is_zero(v));
        Ok(LieAlgebra { name: name.into(), dim, basis_labels, structure })
    }

    /// The abelian algebra of the given dimension, basis `e1 … en`.
    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        let labels = (1..=dim).map(|i| format!("e{i}")).collect();
        LieAlgebra::new_unchecked(name, labels, Vec::new()).expect("abelian table is well-formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis_labels[i]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.basis_labels.iter().position(|l| l == label)
    }

    /// Stored structure table (only `i < j`, only nonzero brackets).
    pub fn structure(&self) -> &BTreeMap<(usize, usize), Vec<Rat>> {
        &self.structure
    }

    /// `[e_i, e_j]` for arbitrary index order (antisymmetric extension).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        if i == j {
            return vec_zero(self.dim);
        }
        if i < j {
            self.structure.get(&(i, j)).cloned().unwrap_or_else(|| vec_zero(self.dim))
        } else {
            let mut v = self.bracket_basis(j, i);
            for x in &mut v {
                *x = -x.clone();
            }
            v
        }
    }

    /// `[v, e_k]` for a coefficient vector `v`.
    pub fn bracket_vec_basis(&self, v: &[Rat], k: usize) -> Vec<Rat> {
        let mut out = vec_zero(self.dim);
        for (m, c) in v.iter().enumerate() {
            vec_add_scaled(&mut out, c, &self.bracket_basis(m, k));
        }
        out
    }

    /// The bracket `[x, y]` of two coefficient vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, LieError> {
        if x.len() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        if y.len() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, found: y.len() });
        }
        let mut out = vec_zero(self.dim);
        for ((i, j), coeffs) in &self.structure {
            // Bilinearity: the (i,j) table entry contributes (x_i y_j − x_j y_i)·[e_i,e_j].
            let c = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            vec_add_scaled(&mut out, &c, coeffs);
        }
        Ok(out)
    }

    /// All basis triples `i < j < k` where the Jacobi identity fails; empty
    /// means the table is a Lie algebra.
    pub fn check_jacobi(&self) -> Vec<(usize, usize, usize)> {
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut sum = self.bracket_vec_basis(&self.bracket_basis(i, j), k);
                    sum = vec_add(&sum, &self.bracket_vec_basis(&self.bracket_basis(j, k), i));
                    sum = vec_add(&sum, &self.bracket_vec_basis(&self.bracket_basis(k, i), j));
                    if !vec_is_zero(&sum) {
                        violations.push((i, j, k));
                    }
                }
            }
        }
        violations
    }

    /// Matrix of `ad_x = [x, ·]` in the algebra basis.
    pub fn ad_matrix(&self, x: &[Rat]) -> Matrix {
        assert_eq!(x.len(), self.dim, "vector has wrong length");
        Matrix::from_cols(self.dim, (0..self.dim).map(|j| self.bracket_vec_basis(x, j)).collect())
    }

    /// The center `{z : [z, e_i] = 0 for all i}`, computed as the kernel of
    /// the stacked adjoint matrices.
    pub fn center(&self) -> Subspace {
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            // Rows expressing the components of [z, e_i] as linear forms in z.
            let block = Matrix::from_cols(
                self.dim,
                (0..self.dim).map(|m| self.bracket_basis(m, i)).collect(),
            );
            for r in 0..self.dim {
                rows.push(block.row(r));
            }
        }
        Matrix::from_rows(rows).kernel()
    }

    /// The adjoint representation `x ↦ ad_x`.
    pub fn adjoint(&self) -> Representation {
        let action = (0..self.dim)
            .map(|i| {
                let mut x = vec_zero(self.dim);
                x[i] = Rat::from_integer(1.into());
                self.ad_matrix(&x)
            })
            .collect();
        Representation::new(self.clone(), self.dim, action)
            .expect("adjoint action is a homomorphism by the Jacobi identity")
    }

    /// The space of derivations `{D : D[x,y] = [Dx,y] + [x,Dy]}` inside the
    /// row-major-flattened matrix space ℚ^(dim²), found by one linear system
    /// over all basis pairs.
    pub fn derivations(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = self.bracket_basis(i, j);
                // Component a of D[e_i,e_j] − [De_i,e_j] − [e_i,De_j] = 0,
                // linear in the unknowns d_{ab} = D[a][b] (row-major a*n+b).
                for a in 0..n {
                    let mut row = vec_zero(n * n);
                    for (b, cb) in c.iter().enumerate() {
                        row[a * n + b] += cb;
                    }
                    for m in 0..n {
                        let bm_j = self.bracket_basis(m, j);
                        row[m * n + i] -= &bm_j[a];
                        let bi_m = self.bracket_basis(i, m);
                        row[m * n + j] -= &bi_m[a];
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(n * n);
        }
        Matrix::from_rows(rows).kernel()
    }

    /// The inner derivations `ad(h)` as a subspace of the flattened matrix
    /// space; its dimension is `dim − dim Z`.
    pub fn inner_derivations(&self) -> Subspace {
        let vectors = (0..self.dim)
            .map(|i| {
                let mut x = vec_zero(self.dim);
                x[i] = Rat::from_integer(1.into());
                self.ad_matrix(&x).flatten()
            })
            .collect();
        Subspace::span(self.dim * self.dim, vectors)
    }

    /// Quotient by an ideal, with the canonical projection. Fails when the
    /// subspace is not closed under bracketing with the whole algebra.
    pub fn quotient_algebra(
        &self,
        ideal: &Subspace,
    ) -> Result<(LieAlgebra, LinearMap), LieError> {
        assert_eq!(ideal.ambient_dim(), self.dim, "ideal lives in the wrong space");
        for (bi, v) in ideal.basis().iter().enumerate() {
            for k in 0..self.dim {
                if !ideal.contains(&self.bracket_vec_basis(v, k)) {
                    return Err(LieError::NotAnIdeal { basis_index: bi, bracket_with: k });
                }
            }
        }
        if ideal.dim() == 0 {
            return Ok((self.clone(), LinearMap::identity(self.dim)));
        }
        let quotient = Quotient::new(self.dim, ideal.clone());
        let labels: Vec<String> = quotient
            .representatives()
            .iter()
            .map(|rep| {
                let coord = rep.iter().position(|c| !c.is_zero()).expect("unit representative");
                format!("{}_bar", self.basis_labels[coord])
            })
            .collect();
        let q = quotient.dim();
        let mut brackets = Vec::new();
        for a in 0..q {
            for b in a + 1..q {
                let ra = &quotient.representatives()[a];
                let rb = &quotient.representatives()[b];
                let br = self.bracket(ra, rb).expect("representative lengths match");
                brackets.push(((a, b), quotient.project(&br)));
            }
        }
        let algebra = LieAlgebra::new(format!("{}_mod", self.name), labels, brackets)?;
        let projection = LinearMap::new(quotient.projection_matrix().clone());
        Ok((algebra, projection))
    }
}
