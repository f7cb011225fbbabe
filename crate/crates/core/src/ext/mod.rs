//! Extensions of Lie algebras `0 → h → e → g → 0`.
//!
//! An extension appears in two interchangeable presentations. The concrete
//! one is an algebra `e` together with inclusion and projection maps
//! ([`Extension`]). The combinatorial one is *extension data* on the pair
//! `(g, h)` ([`ExtensionData`]): a family `α` of derivations of `h`, one per
//! `g`-basis element, plus a degree-2 correction cochain `ρ`, subject to
//!
//! * each `α_X` is a derivation of `h`,
//! * the curvature identity `[α_X, α_Y] − α_{[X,Y]} = ad_{ρ(X,Y)}`,
//! * the closure condition `δ_α ρ = 0`.
//!
//! [`build`] and [`extract`] convert between the two presentations;
//! [`transform`] changes the section the data were read off from;
//! [`equivalent`] decides when two data present the same extension.
//! The outer-action layer ([`OuterAction`], [`from_outer_centerless`],
//! [`pullback`], [`obstruction`], [`enumerate_extensions`]) answers which
//! actions of `g` on `h` "modulo inner" come from extensions at all, and
//! parameterizes the extensions that do exist by degree-2 cohomology of the
//! center of `h`.

use std::fmt;

use thiserror::Error;

use crate::cochain::{delta, wedge_bracket, ActionSpec, SkewCochain};
use crate::lie::{LieAlgebra, LinearMap};
use crate::linalg::{ratio, Matrix};

mod equivalence;
mod extension;
mod outer;

pub(crate) use equivalence::inner_adjustment;
pub use equivalence::{
    center_module, decide_split_abelian, equivalent, verify_split, EquivalenceWitness,
};
pub use extension::{build, extract, semidirect, Extension};
pub use outer::{
    central_class, enumerate_extensions, from_outer_centerless, obstruction, pullback,
    CentralClass, InvarianceReport, Obstruction, OuterAction,
};

/// Failure of an extension-level operation.
#[derive(Debug, Error, PartialEq)]
pub enum ExtError {
    #[error("expected {expected} action matrices (one per basis element), found {found}")]
    ActionCount { expected: usize, found: usize },
    #[error("action matrix {index} is {rows}×{cols}, expected {dim}×{dim}")]
    ActionShape { index: usize, rows: usize, cols: usize, dim: usize },
    #[error(
        "correction cochain has degree {degree} over dims {from}→{to}, \
         expected degree 2 over {expected_from}→{expected_to}"
    )]
    RhoShape {
        degree: usize,
        from: usize,
        to: usize,
        expected_from: usize,
        expected_to: usize,
    },
    #[error("map is {rows}×{cols}, expected {expected_rows}×{expected_cols}")]
    MapShape { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("invalid extension data: {}", join_violations(.0))]
    InvalidData(Vec<DataViolation>),
    #[error("the two data live over different algebras")]
    AlgebraMismatch,
    #[error("inclusion and projection do not present an extension: {reason}")]
    NotExact { reason: &'static str },
    #[error("the image of the inclusion is not an ideal")]
    ImageNotIdeal,
    #[error("{what} is not a homomorphism at basis pair ({i}, {j})")]
    NotAHomomorphism { what: &'static str, i: usize, j: usize },
    #[error("projection ∘ section is not the identity")]
    NotASection,
    #[error("the map does not transform the first datum into the second")]
    BadWitness,
    #[error("splitness over a nonabelian kernel is decided only against a supplied certificate")]
    SplitUndecidable,
    #[error("the kernel has a center of dimension {dim}; this construction needs a centerless kernel")]
    CenterNotZero { dim: usize },
    #[error("outer image {index} has {found} coordinates, expected {expected}")]
    CoordinateLength { index: usize, expected: usize, found: usize },
    #[error("lift matrix {index} does not represent the outer action class there")]
    BadLift { index: usize },
    #[error("the supplied correction violates the curvature identity at basis pair ({i}, {j})")]
    BadRhoChoice { i: usize, j: usize },
    #[error("the obstruction class does not vanish; a representative is {0}")]
    ObstructionNonzero(String),
    #[error("the outer action is over a different kernel algebra")]
    OuterMismatch,
}

fn join_violations(vs: &[DataViolation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

/// One failed validity condition of an [`ExtensionData`]. Violations are
/// ordinary data — inspecting an invalid datum is a supported operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DataViolation {
    /// `α` at this basis index is not a derivation of the kernel.
    NotADerivation { index: usize },
    /// `[α_X, α_Y] − α_{[X,Y]} ≠ ad_{ρ(X,Y)}` at this basis pair.
    CurvatureMismatch { i: usize, j: usize },
    /// `δ_α ρ ≠ 0`.
    CorrectionNotClosed,
}

impl fmt::Display for DataViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataViolation::NotADerivation { index } => {
                write!(f, "alpha[{index}] is not a derivation of the kernel")
            }
            DataViolation::CurvatureMismatch { i, j } => {
                write!(f, "curvature of alpha at pair ({i}, {j}) differs from ad of rho({i}, {j})")
            }
            DataViolation::CorrectionNotClosed => write!(f, "delta_alpha(rho) is nonzero"),
        }
    }
}

/// Extension data `(α, ρ)` on the pair `(g, h)`.
///
/// The constructor checks shapes only; the validity conditions are a
/// property to query via [`ExtensionData::check`], so that deliberately
/// broken data can be represented and reported on.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionData {
    g: LieAlgebra,
    h: LieAlgebra,
    alpha: Vec<Matrix>,
    rho: SkewCochain,
}

impl ExtensionData {
    pub fn new(
        g: LieAlgebra,
        h: LieAlgebra,
        alpha: Vec<Matrix>,
        rho: SkewCochain,
    ) -> Result<Self, ExtError> {
        if alpha.len() != g.dim() {
            return Err(ExtError::ActionCount { expected: g.dim(), found: alpha.len() });
        }
        for (index, m) in alpha.iter().enumerate() {
            if m.rows() != h.dim() || m.cols() != h.dim() {
                return Err(ExtError::ActionShape {
                    index,
                    rows: m.rows(),
                    cols: m.cols(),
                    dim: h.dim(),
                });
            }
        }
        if rho.degree() != 2 || rho.source_dim() != g.dim() || rho.target_dim() != h.dim() {
            return Err(ExtError::RhoShape {
                degree: rho.degree(),
                from: rho.source_dim(),
                to: rho.target_dim(),
                expected_from: g.dim(),
                expected_to: h.dim(),
            });
        }
        Ok(ExtensionData { g, h, alpha, rho })
    }

    /// The datum of the direct sum: `α = 0`, `ρ = 0`.
    pub fn direct_sum(g: LieAlgebra, h: LieAlgebra) -> Self {
        let alpha = vec![Matrix::zeros(h.dim(), h.dim()); g.dim()];
        let rho = SkewCochain::zero(2, g.dim(), h.dim());
        ExtensionData::new(g, h, alpha, rho).expect("zero data is well-shaped")
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn h(&self) -> &LieAlgebra {
        &self.h
    }

    pub fn alpha(&self) -> &[Matrix] {
        &self.alpha
    }

    pub fn alpha_matrix(&self, k: usize) -> &Matrix {
        &self.alpha[k]
    }

    /// The action family as a cochain-operator coefficient spec.
    pub fn alpha_spec(&self) -> ActionSpec {
        ActionSpec::linear(self.g.dim(), self.h.dim(), self.alpha.clone())
            .expect("shapes were validated at construction")
    }

    pub fn rho(&self) -> &SkewCochain {
        &self.rho
    }

    /// All violated validity conditions; an empty report means the datum
    /// genuinely describes an extension.
    pub fn check(&self) -> Vec<DataViolation> {
        let mut report = Vec::new();
        for (index, m) in self.alpha.iter().enumerate() {
            if !is_derivation(&self.h, m) {
                report.push(DataViolation::NotADerivation { index });
            }
        }
        for i in 0..self.g.dim() {
            for j in i + 1..self.g.dim() {
                let defect = curvature_defect(&self.g, &self.alpha, i, j);
                if defect != self.h.ad_matrix(self.rho.get(&[i, j])) {
                    report.push(DataViolation::CurvatureMismatch { i, j });
                }
            }
        }
        let closed = delta(&self.g, &self.alpha_spec(), &self.rho)
            .expect("shapes were validated at construction");
        if !closed.is_zero() {
            report.push(DataViolation::CorrectionNotClosed);
        }
        report
    }

    /// Error out with the full violation report unless the datum is valid.
    pub fn require_valid(&self) -> Result<(), ExtError> {
        let report = self.check();
        if report.is_empty() {
            Ok(())
        } else {
            Err(ExtError::InvalidData(report))
        }
    }
}

/// Whether the matrix satisfies `D[x,y] = [Dx,y] + [x,Dy]` on basis pairs.
fn is_derivation(h: &LieAlgebra, d: &Matrix) -> bool {
    for i in 0..h.dim() {
        for j in i + 1..h.dim() {
            let lhs = d.mul_vec(&h.bracket_basis(i, j));
            let di = d.col(i);
            let dj = d.col(j);
            let rhs = crate::linalg::vec_sub(
                &h.bracket_vec_basis(&di, j),
                &h.bracket_vec_basis(&dj, i),
            );
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `[α_i, α_j] − α_{[X_i, X_j]}`: the amount by which the family fails to be
/// a homomorphism at one basis pair.
pub(crate) fn curvature_defect(
    g: &LieAlgebra,
    alpha: &[Matrix],
    i: usize,
    j: usize,
) -> Matrix {
    let mut defect = alpha[i].commutator(&alpha[j]);
    for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
        defect = defect.sub(&alpha[k].scale(c));
    }
    defect
}

/// Rewrite a datum through the section change `s ↦ s + b`:
/// `α′ = α + ad∘b` and `ρ′ = ρ + δ_α b + ½[b,b]_∧`. Validity is preserved,
/// and `transform(transform(d, b), −b) = d` exactly.
pub fn transform(d: &ExtensionData, b: &LinearMap) -> Result<ExtensionData, ExtError> {
    require_map_shape(b, d.g.dim(), d.h.dim())?;
    let alpha: Vec<Matrix> = d
        .alpha
        .iter()
        .enumerate()
        .map(|(k, m)| m.add(&d.h.ad_matrix(&b.image_of_basis(k))))
        .collect();
    let bc = SkewCochain::from_linear_map(b);
    let shift = delta(&d.g, &d.alpha_spec(), &bc).expect("shapes agree by construction");
    let square = wedge_bracket(&d.h, &bc, &bc).expect("shapes agree by construction");
    let rho = d.rho.add(&shift).add(&square.scale(&ratio(1, 2)));
    ExtensionData::new(d.g.clone(), d.h.clone(), alpha, rho)
}

pub(crate) fn require_map_shape(
    map: &LinearMap,
    domain: usize,
    codomain: usize,
) -> Result<(), ExtError> {
    if map.domain_dim() != domain || map.codomain_dim() != codomain {
        return Err(ExtError::MapShape {
            rows: map.codomain_dim(),
            cols: map.domain_dim(),
            expected_rows: codomain,
            expected_cols: domain,
        });
    }
    Ok(())
}
