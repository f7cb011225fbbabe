//! Representations: a vector space with a genuine Lie-algebra action.

use crate::linalg::{vec_zero, Matrix, Rat};

use super::{LieAlgebra, LieError};

/// A based vector space `V` together with a homomorphism into `gl(V)`,
/// given by one matrix per algebra basis element.
///
/// The constructor verifies the homomorphism identity
/// `action([e_i,e_j]) = [action(e_i), action(e_j)]` on basis pairs —
/// bilinearity makes that sufficient. This is exactly what separates a
/// module (where cohomology is defined) from a raw linear family (where the
/// differential fails to square to zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    space_dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        algebra: LieAlgebra,
        space_dim: usize,
        action: Vec<Matrix>,
    ) -> Result<Self, LieError> {
        assert_eq!(action.len(), algebra.dim(), "one action matrix per basis element");
        for m in &action {
            assert_eq!((m.rows(), m.cols()), (space_dim, space_dim), "action matrix shape");
        }
        for i in 0..algebra.dim() {
            for j in i + 1..algebra.dim() {
                let commutator = action[i].commutator(&action[j]);
                let mut rhs = Matrix::zeros(space_dim, space_dim);
                for (k, c) in algebra.bracket_basis(i, j).iter().enumerate() {
                    rhs = rhs.add(&action[k].scale(c));
                }
                if commutator != rhs {
                    return Err(LieError::NotAHomomorphism { i, j });
                }
            }
        }
        Ok(Representation { algebra, space_dim, action })
    }

    /// The trivial action of an algebra on ℚⁿ.
    pub fn trivial(algebra: LieAlgebra, space_dim: usize) -> Self {
        let action = vec![Matrix::zeros(space_dim, space_dim); algebra.dim()];
        Representation::new(algebra, space_dim, action)
            .expect("zero matrices form a homomorphism")
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn action_of_basis(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// The action matrix of an arbitrary algebra element.
    pub fn act(&self, x: &[Rat]) -> Matrix {
        assert_eq!(x.len(), self.algebra.dim(), "vector has wrong length");
        let mut m = Matrix::zeros(self.space_dim, self.space_dim);
        for (i, c) in x.iter().enumerate() {
            m = m.add(&self.action[i].scale(c));
        }
        m
    }

    /// `x · v` for an algebra element and a space vector.
    pub fn act_on(&self, x: &[Rat], v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.space_dim, "space vector has wrong length");
        if self.space_dim == 0 {
            return vec_zero(0);
        }
        self.act(x).mul_vec(v)
    }

    /// The same representation after the base change `v ↦ p·v` of `V`.
    /// Fails when `p` is singular.
    pub fn conjugate(&self, p: &Matrix) -> Option<Representation> {
        let p_inv = p.inverse()?;
        let action = self.action.iter().map(|m| p.mul(m).mul(&p_inv)).collect();
        Some(
            Representation::new(self.algebra.clone(), self.space_dim, action)
                .expect("conjugation preserves the homomorphism identity"),
        )
    }
}
