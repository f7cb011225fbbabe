//! The outer algebra `out(h) = der(h)/ad(h)` and its action on the center.

use crate::linalg::{Matrix, Rat, Subspace};

use super::{LieAlgebra, LieError, LinearMap, Representation};

/// The quotient Lie algebra `der(h)/ad(h)` with an explicit, deterministic
/// choice of representative derivations.
///
/// The representatives (the `lift`) matter: constructions that must "choose a
/// linear lift" of a map into `out(h)` all route through the stored lift, so
/// their outputs are reproducible — and independence results about the choice
/// become testable theorems instead of excuses for nondeterminism.
#[derive(Debug, Clone, PartialEq)]
pub struct OuterAlgebra {
    source: LieAlgebra,
    der: Subspace,
    inner: Subspace,
    /// Representative derivations, one per quotient basis class, flattened
    /// row-major (columns of `lift`).
    lift: LinearMap,
    algebra: LieAlgebra,
    center: Subspace,
    center_action: Representation,
}

impl OuterAlgebra {
    /// Compute `out(h)` for an algebra `h`. Always succeeds for a valid
    /// algebra; internal well-definedness checks guard against library bugs.
    pub(super) fn compute(h: &LieAlgebra) -> OuterAlgebra {
        let n = h.dim();
        let der = h.derivations();
        let inner = h.inner_derivations();
        assert!(inner.is_subspace_of(&der), "inner derivations must be derivations");
        // Ideal property of ad(h) in der(h): [D, ad_H] = ad_{D(H)}. Checked
        // explicitly because the quotient bracket below silently relies on it.
        for d in der.basis() {
            let dm = Matrix::from_flat(n, n, d.clone());
            for a in inner.basis() {
                let am = Matrix::from_flat(n, n, a.clone());
                assert!(
                    inner.contains(&dm.commutator(&am).flatten()),
                    "ad(h) must be an ideal of der(h)"
                );
            }
        }
        let reps = der.extension_of(&inner);
        let q = reps.len();
        let lift = LinearMap::from_images(n * n, reps.clone());
        // Quotient bracket on representatives, expressed back in quotient
        // coordinates; well-defined by the ideal property above.
        let mut brackets = Vec::new();
        for a in 0..q {
            for b in a + 1..q {
                let ma = Matrix::from_flat(n, n, reps[a].clone());
                let mb = Matrix::from_flat(n, n, reps[b].clone());
                let coords = project_relative(&inner, &reps, &ma.commutator(&mb).flatten())
                    .expect("bracket of derivations is a derivation");
                brackets.push(((a, b), coords));
            }
        }
        let labels = (1..=q).map(|i| format!("D{i}")).collect();
        let algebra = LieAlgebra::new(format!("out({})", h.name()), labels, brackets)
            .expect("quotient bracket satisfies Jacobi");
        // Restrict representatives to the center. Derivations preserve Z(h)
        // ([Dz, x] = D[z,x] − [z, Dx] = 0), and inner derivations kill it, so
        // the action descends to out(h).
        let center = h.center();
        let z = center.dim();
        for a in inner.basis() {
            let am = Matrix::from_flat(n, n, a.clone());
            for zv in center.basis() {
                assert!(
                    crate::linalg::vec_is_zero(&am.mul_vec(zv)),
                    "inner derivations must act as zero on the center"
                );
            }
        }
        let mut action = Vec::with_capacity(q);
        for rep in &reps {
            let rm = Matrix::from_flat(n, n, rep.clone());
            let cols: Vec<Vec<Rat>> = center
                .basis()
                .iter()
                .map(|zv| {
                    center
                        .coordinates_of(&rm.mul_vec(zv))
                        .expect("derivations preserve the center")
                })
                .collect();
            action.push(Matrix::from_cols(z, cols));
        }
        let center_action = Representation::new(algebra.clone(), z, action)
            .expect("center action descends to a homomorphism of out(h)");
        OuterAlgebra { source: h.clone(), der, inner, lift, algebra, center, center_action }
    }

    /// The algebra `h` this quotient was computed from.
    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    /// All derivations of `h`, inside ℚ^(dim²).
    pub fn der(&self) -> &Subspace {
        &self.der
    }

    pub fn der_dim(&self) -> usize {
        self.der.dim()
    }

    /// The inner derivations `ad(h)`.
    pub fn inner(&self) -> &Subspace {
        &self.inner
    }

    pub fn quotient_dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `out(h)` as a Lie algebra in quotient coordinates (basis `D1 … Dq`).
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// The chosen representative derivations as a map from quotient
    /// coordinates into flattened matrix space.
    pub fn lift(&self) -> &LinearMap {
        &self.lift
    }

    /// The representative derivation of a quotient element, as a matrix.
    pub fn lift_matrix(&self, coords: &[Rat]) -> Matrix {
        let n = self.source.dim();
        Matrix::from_flat(n, n, self.lift.apply(coords))
    }

    /// `Z(h)` as a subspace of `h`.
    pub fn center(&self) -> &Subspace {
        &self.center
    }

    /// The action of `out(h)` on `Z(h)` in center coordinates.
    pub fn center_action(&self) -> &Representation {
        &self.center_action
    }

    /// Quotient coordinates of a derivation given as a matrix. Fails when
    /// the matrix is not a derivation of `h`.
    pub fn project_matrix(&self, d: &Matrix) -> Result<Vec<Rat>, LieError> {
        let n = self.source.dim();
        assert_eq!((d.rows(), d.cols()), (n, n), "derivation matrix shape");
        let flat = d.flatten();
        if !self.der.contains(&flat) {
            return Err(LieError::NotADerivation { name: self.source.name().to_string() });
        }
        let reps: Vec<Vec<Rat>> =
            (0..self.quotient_dim()).map(|i| self.lift.image_of_basis(i)).collect();
        Ok(project_relative(&self.inner, &reps, &flat).expect("membership checked above"))
    }
}

/// Coordinates of `v` along `reps` in the decomposition
/// `span(inner) ⊕ span(reps)`; `None` when `v` lies outside the sum.
fn project_relative(inner: &Subspace, reps: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    let ambient = inner.ambient_dim();
    let mut cols: Vec<Vec<Rat>> = inner.basis().to_vec();
    cols.extend(reps.iter().cloned());
    let m = Matrix::from_cols(ambient, cols);
    let solution = m.solve(v).expect("shapes agree")?;
    Some(solution.particular[inner.dim()..].to_vec())
}

impl LieAlgebra {
    /// The outer algebra `der(h)/ad(h)` with its center action.
    pub fn outer(&self) -> OuterAlgebra {
        OuterAlgebra::compute(self)
    }
}
