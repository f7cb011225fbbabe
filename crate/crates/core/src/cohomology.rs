//! Chevalley–Eilenberg cohomology of a module: cocycles, coboundaries,
//! dimensions, representative classes, and class arithmetic.
//!
//! Everything here takes a genuine [`Representation`] — a raw linear family
//! with nonzero curvature has `δ² ≠ 0` and admits no cohomology, so the type
//! system simply never lets one in.

use thiserror::Error;

use crate::cochain::{binomial, delta, ActionSpec, SkewCochain};
use crate::lie::Representation;
use crate::linalg::{Matrix, Subspace};

/// Failure in class arithmetic.
#[derive(Debug, Error, PartialEq)]
pub enum CohomologyError {
    #[error("cochain is not a cocycle (δφ ≠ 0)")]
    NotACocycle,
    #[error("cohomology classes live over different modules")]
    ModuleMismatch,
    #[error("cohomology classes have different degrees: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// Dimension of the degree-`p` cochain space `C^p = Λᵖg* ⊗ V` in flattened
/// coordinates.
fn cochain_space_dim(module: &Representation, p: usize) -> usize {
    binomial(module.algebra().dim(), p) * module.space_dim()
}

/// Matrix of `δ: C^p → C^{p+1}` in flattened tuple-major coordinates.
fn delta_matrix(module: &Representation, p: usize) -> Matrix {
    let g = module.algebra();
    let alpha = ActionSpec::Module(module.clone());
    let domain = cochain_space_dim(module, p);
    let codomain = cochain_space_dim(module, p + 1);
    let mut m = Matrix::zeros(codomain, domain);
    for j in 0..domain {
        let mut unit = crate::linalg::vec_zero(domain);
        unit[j] = crate::linalg::rat(1);
        let phi = SkewCochain::from_flat(p, g.dim(), module.space_dim(), unit);
        let image = delta(g, &alpha, &phi).expect("shapes agree by construction");
        for (i, v) in image.flatten().into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

/// One degree of the cochain complex of a module: the differential out of
/// degree `n` and the differential into it. `δₙ ∘ δₙ₋₁ = 0` is asserted at
/// construction — it is the complex property itself, guaranteed by the
/// homomorphism check in [`Representation`].
#[derive(Debug, Clone)]
pub struct CochainComplexSlice {
    module: Representation,
    degree: usize,
    delta_n: Matrix,
    delta_prev: Matrix,
}

impl CochainComplexSlice {
    pub fn new(module: &Representation, degree: usize) -> Self {
        let delta_n = delta_matrix(module, degree);
        let delta_prev = if degree == 0 {
            // C^{-1} = 0: the incoming differential has no columns.
            Matrix::zeros(cochain_space_dim(module, 0), 0)
        } else {
            delta_matrix(module, degree - 1)
        };
        assert!(
            delta_n.mul(&delta_prev).is_zero(),
            "δ∘δ must vanish for a module action"
        );
        CochainComplexSlice { module: module.clone(), degree, delta_n, delta_prev }
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn delta_n(&self) -> &Matrix {
        &self.delta_n
    }

    pub fn delta_prev(&self) -> &Matrix {
        &self.delta_prev
    }

    /// Cocycles `Z^n = ker δₙ` in flattened coordinates.
    pub fn cocycles(&self) -> Subspace {
        self.delta_n.kernel()
    }

    /// Coboundaries `B^n = im δₙ₋₁` in flattened coordinates.
    pub fn coboundaries(&self) -> Subspace {
        self.delta_prev.image()
    }

    pub fn cohomology_dim(&self) -> usize {
        self.cocycles().dim() - self.coboundaries().dim()
    }

    /// Representative cocycles completing the coboundary space inside the
    /// cocycle space — one per cohomology class in a basis of `H^n`. The
    /// choice is the deterministic echelon completion, so representatives
    /// are reproducible across runs.
    pub fn representatives(&self) -> Vec<SkewCochain> {
        let z = self.cocycles();
        let b = self.coboundaries();
        z.extension_of(&b)
            .into_iter()
            .map(|flat| {
                SkewCochain::from_flat(
                    self.degree,
                    self.module.algebra().dim(),
                    self.module.space_dim(),
                    flat,
                )
            })
            .collect()
    }
}

/// `dim H^n(g; V)` for the module `V`.
pub fn cohomology_dim(module: &Representation, n: usize) -> usize {
    CochainComplexSlice::new(module, n).cohomology_dim()
}

/// A basis of `H^n` as explicit representative cocycles.
pub fn representatives(module: &Representation, n: usize) -> Vec<SkewCochain> {
    CochainComplexSlice::new(module, n).representatives()
}

/// Decide whether a cocycle `φ` of degree ≥ 1 is a coboundary; on success
/// the witness `ψ` satisfies `δψ = φ` exactly. Fails when `φ` is not a
/// cocycle at all.
pub fn is_coboundary(
    module: &Representation,
    phi: &SkewCochain,
) -> Result<Option<SkewCochain>, CohomologyError> {
    assert!(phi.degree() >= 1, "degree-0 cochains have no incoming differential");
    assert_eq!(phi.source_dim(), module.algebra().dim(), "source dimension mismatch");
    assert_eq!(phi.target_dim(), module.space_dim(), "target dimension mismatch");
    let slice = CochainComplexSlice::new(module, phi.degree());
    let flat = phi.flatten();
    if !crate::linalg::vec_is_zero(&slice.delta_n().mul_vec(&flat)) {
        return Err(CohomologyError::NotACocycle);
    }
    let solution = slice.delta_prev().solve(&flat).expect("lengths agree by construction");
    Ok(solution.map(|s| {
        SkewCochain::from_flat(
            phi.degree() - 1,
            module.algebra().dim(),
            module.space_dim(),
            s.particular,
        )
    }))
}

/// A cohomology class, held by one representative cocycle over its module.
#[derive(Debug, Clone, PartialEq)]
pub struct CohomologyClass {
    module: Representation,
    representative: SkewCochain,
}

impl CohomologyClass {
    /// Wrap a representative; rejects non-cocycles.
    pub fn new(module: Representation, representative: SkewCochain) -> Result<Self, CohomologyError> {
        let slice = CochainComplexSlice::new(&module, representative.degree());
        if !crate::linalg::vec_is_zero(&slice.delta_n().mul_vec(&representative.flatten())) {
            return Err(CohomologyError::NotACocycle);
        }
        Ok(CohomologyClass { module, representative })
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.representative.degree()
    }

    pub fn representative(&self) -> &SkewCochain {
        &self.representative
    }

    /// True when the class is zero, i.e. the representative is a coboundary.
    pub fn is_zero(&self) -> Result<bool, CohomologyError> {
        if self.representative.degree() == 0 {
            return Ok(self.representative.is_zero());
        }
        Ok(is_coboundary(&self.module, &self.representative)?.is_some())
    }
}

/// Class equality: same module, same degree, difference a coboundary.
pub fn class_equal(c1: &CohomologyClass, c2: &CohomologyClass) -> Result<bool, CohomologyError> {
    if c1.module != c2.module {
        return Err(CohomologyError::ModuleMismatch);
    }
    if c1.degree() != c2.degree() {
        return Err(CohomologyError::DegreeMismatch(c1.degree(), c2.degree()));
    }
    let diff = c1.representative.sub(&c2.representative);
    if diff.degree() == 0 {
        return Ok(diff.is_zero());
    }
    Ok(is_coboundary(&c1.module, &diff)?.is_some())
}
