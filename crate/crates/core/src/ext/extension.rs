//! Concrete extensions: an algebra `e` with inclusion, projection, and an
//! optional section, plus the conversions to and from [`ExtensionData`].

use super::{require_map_shape, ExtError, ExtensionData};
use crate::cochain::SkewCochain;
use crate::lie::{LieAlgebra, LinearMap};
use crate::linalg::{rat, vec_sub, vec_zero, Matrix, Rat};

/// An exact sequence `0 → h → e → g → 0` of Lie algebras, with an optional
/// distinguished linear section of the projection. The constructor verifies
/// every structural invariant, so a value of this type *is* an extension.
#[derive(Debug, Clone, PartialEq)]
pub struct Extension {
    g: LieAlgebra,
    h: LieAlgebra,
    e: LieAlgebra,
    inclusion: LinearMap,
    projection: LinearMap,
    section: Option<LinearMap>,
}

impl Extension {
    pub fn new(
        g: LieAlgebra,
        h: LieAlgebra,
        e: LieAlgebra,
        inclusion: LinearMap,
        projection: LinearMap,
        section: Option<LinearMap>,
    ) -> Result<Self, ExtError> {
        require_map_shape(&inclusion, h.dim(), e.dim())?;
        require_map_shape(&projection, e.dim(), g.dim())?;
        if e.dim() != h.dim() + g.dim() {
            return Err(ExtError::NotExact { reason: "dim e differs from dim h + dim g" });
        }
        if inclusion.matrix().rank() != h.dim() {
            return Err(ExtError::NotExact { reason: "the inclusion is not injective" });
        }
        if projection.matrix().rank() != g.dim() {
            return Err(ExtError::NotExact { reason: "the projection is not surjective" });
        }
        if !projection.compose(&inclusion).is_zero() {
            return Err(ExtError::NotExact { reason: "projection ∘ inclusion is nonzero" });
        }
        if inclusion.matrix().image() != projection.matrix().kernel() {
            return Err(ExtError::NotExact {
                reason: "the image of the inclusion differs from the kernel of the projection",
            });
        }
        for i in 0..h.dim() {
            for j in i + 1..h.dim() {
                let lhs = inclusion.apply(&h.bracket_basis(i, j));
                let rhs = e
                    .bracket(&inclusion.image_of_basis(i), &inclusion.image_of_basis(j))
                    .expect("inclusion images have length dim e");
                if lhs != rhs {
                    return Err(ExtError::NotAHomomorphism { what: "the inclusion", i, j });
                }
            }
        }
        for i in 0..e.dim() {
            for j in i + 1..e.dim() {
                let lhs = projection.apply(&e.bracket_basis(i, j));
                let rhs = g
                    .bracket(&projection.image_of_basis(i), &projection.image_of_basis(j))
                    .expect("projection images have length dim g");
                if lhs != rhs {
                    return Err(ExtError::NotAHomomorphism { what: "the projection", i, j });
                }
            }
        }
        let ideal = inclusion.matrix().image();
        for k in 0..e.dim() {
            for j in 0..h.dim() {
                let br = e.bracket_vec_basis(&inclusion.image_of_basis(j), k);
                if !ideal.contains(&br) {
                    return Err(ExtError::ImageNotIdeal);
                }
            }
        }
        if let Some(s) = &section {
            require_map_shape(s, g.dim(), e.dim())?;
            if projection.compose(s) != LinearMap::identity(g.dim()) {
                return Err(ExtError::NotASection);
            }
        }
        Ok(Extension { g, h, e, inclusion, projection, section })
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn h(&self) -> &LieAlgebra {
        &self.h
    }

    pub fn e(&self) -> &LieAlgebra {
        &self.e
    }

    pub fn inclusion(&self) -> &LinearMap {
        &self.inclusion
    }

    pub fn projection(&self) -> &LinearMap {
        &self.projection
    }

    pub fn section(&self) -> Option<&LinearMap> {
        self.section.as_ref()
    }

    /// Coordinates in `h` of a vector of `e` lying in the embedded kernel.
    /// Such vectors arise from bracketing into the ideal, so the solve
    /// cannot fail on a validated extension.
    fn kernel_coordinates(&self, v: &[Rat]) -> Vec<Rat> {
        self.inclusion
            .matrix()
            .solve(v)
            .expect("vector length matches dim e")
            .expect("vector lies in the embedded kernel")
            .particular
    }
}

/// Realize extension data as a concrete algebra on `h ⊕ g`: the bracket is
///
/// `[H₁+X₁, H₂+X₂] = [H₁,H₂] + α_{X₁}H₂ − α_{X₂}H₁ + ρ(X₁,X₂) + [X₁,X₂]`.
///
/// Basis labels keep their origin visible (`h.z`, `g.x`); the canonical
/// section `X ↦ 0+X` is attached. Invalid data are rejected with the full
/// violation report.
pub fn build(d: &ExtensionData) -> Result<Extension, ExtError> {
    d.require_valid()?;
    let (nh, ng) = (d.h().dim(), d.g().dim());
    let n = nh + ng;
    let labels = d
        .h()
        .basis_labels()
        .iter()
        .map(|l| format!("h.{l}"))
        .chain(d.g().basis_labels().iter().map(|l| format!("g.{l}")))
        .collect();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut c = vec_zero(n);
            if j < nh {
                c[..nh].clone_from_slice(&d.h().bracket_basis(i, j));
            } else if i < nh {
                for (a, x) in d.alpha_matrix(j - nh).col(i).into_iter().enumerate() {
                    c[a] = -x;
                }
            } else {
                c[..nh].clone_from_slice(d.rho().get(&[i - nh, j - nh]));
                c[nh..].clone_from_slice(&d.g().bracket_basis(i - nh, j - nh));
            }
            brackets.push(((i, j), c));
        }
    }
    let name = format!("ext({},{})", d.h().name(), d.g().name());
    let e = LieAlgebra::new(name, labels, brackets)
        .expect("valid data produce a bracket satisfying Jacobi");
    let inclusion = LinearMap::new(Matrix::from_fn(n, nh, |r, c| {
        if r == c {
            rat(1)
        } else {
            rat(0)
        }
    }));
    let projection = LinearMap::new(Matrix::from_fn(ng, n, |r, c| {
        if c == nh + r {
            rat(1)
        } else {
            rat(0)
        }
    }));
    let section = LinearMap::new(Matrix::from_fn(n, ng, |r, c| {
        if r == nh + c {
            rat(1)
        } else {
            rat(0)
        }
    }));
    let ext = Extension::new(d.g().clone(), d.h().clone(), e, inclusion, projection, Some(section))
        .expect("the canonical presentation is exact");
    Ok(ext)
}

/// Read extension data off a concrete extension through a section `s`:
/// `α_X(H) = [s(X), H]` and `ρ(X,Y) = [s(X), s(Y)] − s([X,Y])`, both
/// expressed in `h`-coordinates through the inclusion.
pub fn extract(ext: &Extension, s: &LinearMap) -> Result<ExtensionData, ExtError> {
    require_map_shape(s, ext.g().dim(), ext.e().dim())?;
    if ext.projection().compose(s) != LinearMap::identity(ext.g().dim()) {
        return Err(ExtError::NotASection);
    }
    let (nh, ng) = (ext.h().dim(), ext.g().dim());
    let mut alpha = Vec::with_capacity(ng);
    for k in 0..ng {
        let sx = s.image_of_basis(k);
        let cols = (0..nh)
            .map(|a| {
                let br = ext
                    .e()
                    .bracket(&sx, &ext.inclusion().image_of_basis(a))
                    .expect("lengths match dim e");
                ext.kernel_coordinates(&br)
            })
            .collect();
        alpha.push(Matrix::from_cols(nh, cols));
    }
    let mut rho = SkewCochain::zero(2, ng, nh);
    for i in 0..ng {
        for j in i + 1..ng {
            let br = ext
                .e()
                .bracket(&s.image_of_basis(i), &s.image_of_basis(j))
                .expect("lengths match dim e");
            let defect = vec_sub(&br, &s.apply(&ext.g().bracket_basis(i, j)));
            rho.set(&[i, j], ext.kernel_coordinates(&defect));
        }
    }
    ExtensionData::new(ext.g().clone(), ext.h().clone(), alpha, rho)
}

/// The split extension of an action: `build` with `ρ = 0`. The action must
/// be a homomorphism into the derivations of `h` — both requirements are
/// exactly the validity report of the zero-correction datum, so failures
/// come back as that report.
pub fn semidirect(
    g: &LieAlgebra,
    h: &LieAlgebra,
    action: Vec<Matrix>,
) -> Result<Extension, ExtError> {
    let rho = SkewCochain::zero(2, g.dim(), h.dim());
    let d = ExtensionData::new(g.clone(), h.clone(), action, rho)?;
    build(&d)
}
