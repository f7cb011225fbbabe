//! Deciding when two extension data present the same extension, and when a
//! datum splits.
//!
//! Equivalence of `(α, ρ)` and `(α′, ρ′)` means some `b: g → h` satisfies
//! `α′ = α + ad∘b` and `ρ′ = ρ + δ_α b + ½[b,b]_∧`. The decision runs in
//! two linear stages: first solve `ad_{b₀(X)} = α′_X − α_X` per basis
//! element — failure already settles the question — then observe that the
//! remaining freedom in `b` is a center-valued map `z`, under which the
//! correction shifts by `δ z` alone (central values drop out of the
//! quadratic term), reducing the rest to a coboundary test over the center
//! module. The quadratic-looking condition is thereby decided exactly.

use super::{require_map_shape, transform, ExtError, ExtensionData};
use crate::cochain::{delta, increasing_tuples, wedge_bracket, SkewCochain};
use crate::cohomology::is_coboundary;
use crate::lie::{LieAlgebra, LinearMap, Representation};
use crate::linalg::{rat, ratio, vec_add_scaled, vec_zero, Matrix, Subspace};

/// A validated change of section relating two data: constructing one proves
/// the relation, so a value of this type is never an unchecked claim.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceWitness {
    b: LinearMap,
}

impl EquivalenceWitness {
    /// Validate that `b` transforms `d1` into `d2` exactly.
    pub fn new(
        d1: &ExtensionData,
        d2: &ExtensionData,
        b: LinearMap,
    ) -> Result<Self, ExtError> {
        if d1.g() != d2.g() || d1.h() != d2.h() {
            return Err(ExtError::AlgebraMismatch);
        }
        let t = transform(d1, &b)?;
        if t.alpha() != d2.alpha() || t.rho() != d2.rho() {
            return Err(ExtError::BadWitness);
        }
        Ok(EquivalenceWitness { b })
    }

    pub fn b(&self) -> &LinearMap {
        &self.b
    }
}

/// The center `Z(h)` as a module over `g`: derivations preserve the center,
/// inner ones kill it, and the curvature of a valid `α` is inner — so the
/// restriction of `α` to `Z(h)` is a genuine representation that does not
/// depend on the inner part of `α` at all.
pub fn center_module(
    g: &LieAlgebra,
    h: &LieAlgebra,
    alpha: &[Matrix],
) -> (Subspace, Representation) {
    let center = h.center();
    let z = center.dim();
    let action = alpha
        .iter()
        .map(|m| {
            let cols = center
                .basis()
                .iter()
                .map(|v| {
                    center
                        .coordinates_of(&m.mul_vec(v))
                        .expect("derivations preserve the center")
                })
                .collect();
            Matrix::from_cols(z, cols)
        })
        .collect();
    let module = Representation::new(g.clone(), z, action)
        .expect("inner curvature acts as zero on the center");
    (center, module)
}

/// Decide equivalence of two valid data over the same `(g, h)`; on success
/// the witness satisfies the section-change equations exactly.
/// Stage 1 of the equivalence decision on its own: a `b₀` with
/// `ad_{b₀(X_k)} = α′_k − α_k` per basis element, or `None` when some
/// action difference is not an inner derivation. Assumes matching, valid
/// data.
pub(crate) fn inner_adjustment(d1: &ExtensionData, d2: &ExtensionData) -> Option<LinearMap> {
    let h = d1.h();
    let nh = h.dim();
    let ad_columns = (0..nh)
        .map(|k| {
            let mut unit = vec_zero(nh);
            unit[k] = rat(1);
            h.ad_matrix(&unit).flatten()
        })
        .collect();
    let ad_map = Matrix::from_cols(nh * nh, ad_columns);
    let mut images = Vec::with_capacity(d1.g().dim());
    for k in 0..d1.g().dim() {
        let diff = d2.alpha_matrix(k).sub(d1.alpha_matrix(k)).flatten();
        let solution = ad_map.solve(&diff).expect("flattened shapes agree")?;
        images.push(solution.particular);
    }
    Some(LinearMap::from_images(nh, images))
}

pub fn equivalent(
    d1: &ExtensionData,
    d2: &ExtensionData,
) -> Result<Option<EquivalenceWitness>, ExtError> {
    if d1.g() != d2.g() || d1.h() != d2.h() {
        return Err(ExtError::AlgebraMismatch);
    }
    d1.require_valid()?;
    d2.require_valid()?;
    let (g, h) = (d1.g(), d1.h());
    let (ng, nh) = (g.dim(), h.dim());

    // Stage 1: make the actions agree.
    let b0 = match inner_adjustment(d1, d2) {
        None => return Ok(None),
        Some(b0) => b0,
    };

    // Stage 2: with actions equal, the remaining correction difference
    // takes central values, and center-valued adjustments of b shift it by
    // their differential alone.
    let shifted = transform(d1, &b0)?;
    assert_eq!(shifted.alpha(), d2.alpha(), "stage 1 matches the actions exactly");
    let difference = d2.rho().sub(shifted.rho());
    let (center, module) = center_module(g, h, d1.alpha());
    let mut dz = SkewCochain::zero(2, ng, center.dim());
    for tuple in increasing_tuples(ng, 2) {
        let coords = center
            .coordinates_of(difference.get(&tuple))
            .expect("corrections with equal actions differ by central values");
        dz.set(&tuple, coords);
    }
    let witness = is_coboundary(&module, &dz)
        .expect("the difference of closed corrections is closed");
    let psi = match witness {
        None => return Ok(None),
        Some(psi) => psi,
    };
    let z_images = (0..ng)
        .map(|k| {
            let mut img = vec_zero(nh);
            for (j, c) in psi.get(&[k]).iter().enumerate() {
                vec_add_scaled(&mut img, c, &center.basis()[j]);
            }
            img
        })
        .collect();
    let b = b0.add(&LinearMap::from_images(nh, z_images));
    let witness = EquivalenceWitness::new(d1, d2, b)
        .expect("the assembled section change realizes the equivalence");
    Ok(Some(witness))
}

/// Check a splitting certificate: `b` splits the datum when
/// `ρ = −δ_α b − ½[b,b]_∧` holds exactly.
pub fn verify_split(d: &ExtensionData, b: &LinearMap) -> Result<bool, ExtError> {
    require_map_shape(b, d.g().dim(), d.h().dim())?;
    d.require_valid()?;
    let bc = SkewCochain::from_linear_map(b);
    let shift = delta(d.g(), &d.alpha_spec(), &bc).expect("shapes agree by construction");
    let square = wedge_bracket(d.h(), &bc, &bc).expect("shapes agree by construction");
    let target = shift.add(&square.scale(&ratio(1, 2))).neg();
    Ok(*d.rho() == target)
}

/// Decide splitness for an abelian kernel, where the quadratic term dies
/// and the condition `δ_α b = −ρ` is linear: a witness exists iff the class
/// of `ρ` vanishes in degree-2 cohomology of the kernel module. Nonabelian
/// kernels are out of scope for blind search — supply a certificate to
/// [`verify_split`] instead.
pub fn decide_split_abelian(d: &ExtensionData) -> Result<Option<LinearMap>, ExtError> {
    d.require_valid()?;
    if !d.h().structure().is_empty() {
        return Err(ExtError::SplitUndecidable);
    }
    let module = Representation::new(d.g().clone(), d.h().dim(), d.alpha().to_vec())
        .expect("an abelian kernel makes a valid action a homomorphism");
    let psi = is_coboundary(&module, &d.rho().neg())
        .expect("a valid correction is closed");
    match psi {
        None => Ok(None),
        Some(psi) => {
            let b = psi.to_linear_map();
            assert!(verify_split(d, &b)?, "the solved section change splits the datum");
            Ok(Some(b))
        }
    }
}
