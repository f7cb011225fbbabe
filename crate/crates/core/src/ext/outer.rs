//! Extensions prescribed only "modulo inner": actions of `g` on `h` through
//! the outer derivation algebra, and the constructions that decide which of
//! them come from honest extensions.
//!
//! An [`OuterAction`] is a homomorphism `ᾱ: g → out(h)`. For a centerless
//! kernel it determines an extension outright ([`from_outer_centerless`],
//! realized concretely by [`pullback`]). In general the failure is measured
//! by a degree-3 class with values in the center ([`obstruction`]); when it
//! vanishes, the extensions that do exist are parameterized by degree-2
//! cohomology classes of the center module ([`enumerate_extensions`]).
//! Independently of any `g`, the kernel itself carries a canonical central
//! class ([`central_class`]) measuring how `h` extends its own inner
//! quotient.

use super::equivalence::center_module;
use super::extension::{extract, Extension};
use super::{curvature_defect, ExtError, ExtensionData};
use crate::cochain::{delta, increasing_tuples, ActionSpec, SkewCochain};
use crate::cohomology::{is_coboundary, representatives, CohomologyClass};
use crate::lie::{LieAlgebra, LinearMap, OuterAlgebra, Representation};
use crate::linalg::{rat, vec_add_scaled, vec_zero, Matrix, Quotient, Rat, Subspace};

/// A homomorphism `ᾱ: g → out(h)`, stored as coordinate vectors in the
/// outer algebra, one per `g`-basis element. Validated on basis pairs at
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct OuterAction {
    g: LieAlgebra,
    out_h: OuterAlgebra,
    images: Vec<Vec<Rat>>,
}

impl OuterAction {
    pub fn new(
        g: LieAlgebra,
        out_h: OuterAlgebra,
        images: Vec<Vec<Rat>>,
    ) -> Result<Self, ExtError> {
        if images.len() != g.dim() {
            return Err(ExtError::ActionCount { expected: g.dim(), found: images.len() });
        }
        let q = out_h.quotient_dim();
        for (index, image) in images.iter().enumerate() {
            if image.len() != q {
                return Err(ExtError::CoordinateLength {
                    index,
                    expected: q,
                    found: image.len(),
                });
            }
        }
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let mut lhs = vec_zero(q);
                for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                    vec_add_scaled(&mut lhs, c, &images[k]);
                }
                let rhs = out_h
                    .algebra()
                    .bracket(&images[i], &images[j])
                    .expect("image lengths were validated");
                if lhs != rhs {
                    return Err(ExtError::NotAHomomorphism { what: "the outer action", i, j });
                }
            }
        }
        Ok(OuterAction { g, out_h, images })
    }

    /// The zero action — always a homomorphism.
    pub fn zero(g: LieAlgebra, out_h: OuterAlgebra) -> Self {
        let images = vec![vec_zero(out_h.quotient_dim()); g.dim()];
        OuterAction::new(g, out_h, images).expect("the zero map is a homomorphism")
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn out(&self) -> &OuterAlgebra {
        &self.out_h
    }

    pub fn image(&self, k: usize) -> &[Rat] {
        &self.images[k]
    }

    pub fn images(&self) -> &[Vec<Rat>] {
        &self.images
    }

    /// The stored echelon lift applied to every image: the deterministic
    /// derivation family all lift-choosing constructions use.
    pub fn lift_default(&self) -> Vec<Matrix> {
        self.images.iter().map(|c| self.out_h.lift_matrix(c)).collect()
    }
}

/// Solve `ad_{ρ(X_i,X_j)} = [α_i, α_j] − α_{[X_i,X_j]}` per basis pair and
/// normalize each solution to have zero coordinates along the center, the
/// unique representative of its solution coset there.
fn solve_correction(g: &LieAlgebra, h: &LieAlgebra, alpha: &[Matrix]) -> SkewCochain {
    let nh = h.dim();
    let ad_columns = (0..nh)
        .map(|k| {
            let mut unit = vec_zero(nh);
            unit[k] = rat(1);
            h.ad_matrix(&unit).flatten()
        })
        .collect();
    let ad_map = Matrix::from_cols(nh * nh, ad_columns);
    let quotient = Quotient::new(nh, h.center());
    let mut rho = SkewCochain::zero(2, g.dim(), nh);
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let defect = curvature_defect(g, alpha, i, j);
            let x = ad_map
                .solve(&defect.flatten())
                .expect("flattened shapes agree")
                .expect("the curvature of a lifted outer action is inner")
                .particular;
            rho.set(&[i, j], quotient.lift(&quotient.project(&x)));
        }
    }
    rho
}

/// A cochain with center coordinates re-embedded into `h`.
fn embed_cochain(center: &Subspace, c: &SkewCochain, nh: usize) -> SkewCochain {
    let mut out = SkewCochain::zero(c.degree(), c.source_dim(), nh);
    for tuple in increasing_tuples(c.source_dim(), c.degree()) {
        let mut v = vec_zero(nh);
        for (j, x) in c.get(&tuple).iter().enumerate() {
            vec_add_scaled(&mut v, x, &center.basis()[j]);
        }
        out.set(&tuple, v);
    }
    out
}

/// Turn an outer action on a centerless kernel into extension data: lift
/// through the stored echelon representatives, then read the correction off
/// the curvature — `ad` is injective, so `ρ` is forced. Closure of the
/// result is a theorem, asserted rather than assumed.
pub fn from_outer_centerless(action: &OuterAction) -> Result<ExtensionData, ExtError> {
    let h = action.out().source().clone();
    let zdim = h.center().dim();
    if zdim != 0 {
        return Err(ExtError::CenterNotZero { dim: zdim });
    }
    let g = action.g().clone();
    let alpha = action.lift_default();
    let rho = solve_correction(&g, &h, &alpha);
    let d = ExtensionData::new(g, h, alpha, rho)?;
    assert!(d.check().is_empty(), "a centerless kernel forces valid data");
    Ok(d)
}

/// Realize an outer action concretely as the fibered product
/// `e₀ = {(D, X) ∈ der(h) ⊕ g : D ↦ ᾱ(X) in out(h)}`, an extension of `g`
/// by the inner derivation algebra `ad(h)`.
pub fn pullback(action: &OuterAction) -> Result<Extension, ExtError> {
    let out = action.out();
    let h = out.source();
    let g = action.g();
    let inner = out.inner();
    let (n2, m, ng) = (h.dim() * h.dim(), inner.dim(), g.dim());

    // The kernel: ad(h) with the commutator bracket, in the echelon basis
    // of the inner derivations.
    let inner_mats: Vec<Matrix> =
        inner.basis().iter().map(|f| Matrix::from_flat(h.dim(), h.dim(), f.clone())).collect();
    let mut had_brackets = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let c = inner
                .coordinates_of(&inner_mats[a].commutator(&inner_mats[b]).flatten())
                .expect("inner derivations close under commutators");
            had_brackets.push(((a, b), c));
        }
    }
    let had_labels = (1..=m).map(|i| format!("ad{i}")).collect();
    let had = LieAlgebra::new(format!("ad({})", h.name()), had_labels, had_brackets)
        .expect("the commutator bracket satisfies Jacobi");

    // Basis of e₀ inside der(h) ⊕ g: the inner basis with zero g-part,
    // then one lifted representative per g-basis element.
    let mut members: Vec<(Matrix, Vec<Rat>)> = inner_mats
        .iter()
        .map(|mat| (mat.clone(), vec_zero(ng)))
        .collect();
    for k in 0..ng {
        let mut unit = vec_zero(ng);
        unit[k] = rat(1);
        members.push((out.lift_matrix(action.image(k)), unit));
    }
    let basis_columns = members
        .iter()
        .map(|(mat, gpart)| {
            let mut col = mat.flatten();
            col.extend(gpart.iter().cloned());
            col
        })
        .collect();
    let basis_matrix = Matrix::from_cols(n2 + ng, basis_columns);

    let mut brackets = Vec::new();
    for a in 0..m + ng {
        for b in a + 1..m + ng {
            let (ma, ga) = &members[a];
            let (mb, gb) = &members[b];
            let mut col = ma.commutator(mb).flatten();
            col.extend(g.bracket(ga, gb).expect("g-part lengths agree"));
            let coords = basis_matrix
                .solve(&col)
                .expect("ambient lengths agree")
                .expect("the fibered product is closed under brackets")
                .particular;
            brackets.push(((a, b), coords));
        }
    }
    let labels = (1..=m)
        .map(|i| format!("ad{i}"))
        .chain(g.basis_labels().iter().map(|l| format!("g.{l}")))
        .collect();
    let e0 = LieAlgebra::new(format!("pullback({},{})", h.name(), g.name()), labels, brackets)
        .expect("a subalgebra bracket satisfies Jacobi");

    let inclusion = LinearMap::new(Matrix::from_fn(m + ng, m, |r, c| {
        if r == c {
            rat(1)
        } else {
            rat(0)
        }
    }));
    let projection = LinearMap::new(Matrix::from_fn(ng, m + ng, |r, c| {
        if c == m + r {
            rat(1)
        } else {
            rat(0)
        }
    }));
    let section = LinearMap::new(Matrix::from_fn(m + ng, ng, |r, c| {
        if r == m + c {
            rat(1)
        } else {
            rat(0)
        }
    }));
    let ext = Extension::new(g.clone(), had, e0, inclusion, projection, Some(section))
        .expect("the pullback presentation is exact");
    Ok(ext)
}

/// The outcome of the obstruction computation for an outer action: the
/// degree-3 obstruction cochain in center coordinates, its class, and — when
/// the class vanishes — corrected data that genuinely describe an extension.
#[derive(Debug, Clone)]
pub struct Obstruction {
    /// The derivation family the computation lifted `ᾱ` to.
    pub alpha: Vec<Matrix>,
    /// The correction candidate used, valued in `h`.
    pub rho: SkewCochain,
    /// `δ_α ρ` in center coordinates relative to [`Obstruction::center`].
    pub lambda: SkewCochain,
    /// The center of the kernel, fixing the coordinates of `lambda`.
    pub center: Subspace,
    /// The class of `lambda` over the center module.
    pub class: CohomologyClass,
    pub vanishes: bool,
    /// Valid extension data `(α, ρ − μ)`, present iff the class vanishes.
    pub corrected: Option<ExtensionData>,
}

/// Measure whether an outer action comes from an extension. The default
/// lift is the stored echelon one and the default correction the
/// center-normalized solution of the curvature identity; both can be
/// overridden to exercise independence of the choices. The obstruction
/// cochain always takes central values and is always closed — both facts
/// are asserted, not assumed.
pub fn obstruction(
    action: &OuterAction,
    lift: Option<Vec<Matrix>>,
    rho_choice: Option<SkewCochain>,
) -> Result<Obstruction, ExtError> {
    let out = action.out();
    let h = out.source().clone();
    let g = action.g().clone();
    let (ng, nh) = (g.dim(), h.dim());

    let alpha = match lift {
        None => action.lift_default(),
        Some(matrices) => {
            if matrices.len() != ng {
                return Err(ExtError::ActionCount { expected: ng, found: matrices.len() });
            }
            for (index, mat) in matrices.iter().enumerate() {
                if mat.rows() != nh || mat.cols() != nh {
                    return Err(ExtError::ActionShape {
                        index,
                        rows: mat.rows(),
                        cols: mat.cols(),
                        dim: nh,
                    });
                }
                let coords =
                    out.project_matrix(mat).map_err(|_| ExtError::BadLift { index })?;
                if coords != action.image(index) {
                    return Err(ExtError::BadLift { index });
                }
            }
            matrices
        }
    };

    let rho = match rho_choice {
        None => solve_correction(&g, &h, &alpha),
        Some(rho) => {
            if rho.degree() != 2 || rho.source_dim() != ng || rho.target_dim() != nh {
                return Err(ExtError::RhoShape {
                    degree: rho.degree(),
                    from: rho.source_dim(),
                    to: rho.target_dim(),
                    expected_from: ng,
                    expected_to: nh,
                });
            }
            for i in 0..ng {
                for j in i + 1..ng {
                    if h.ad_matrix(rho.get(&[i, j])) != curvature_defect(&g, &alpha, i, j) {
                        return Err(ExtError::BadRhoChoice { i, j });
                    }
                }
            }
            rho
        }
    };

    let spec = ActionSpec::linear(ng, nh, alpha.clone()).expect("shapes were validated");
    let lambda_h = delta(&g, &spec, &rho).expect("shapes agree by construction");
    let (center, module) = center_module(&g, &h, &alpha);
    let mut lambda = SkewCochain::zero(3, ng, center.dim());
    for tuple in increasing_tuples(ng, 3) {
        let coords = center
            .coordinates_of(lambda_h.get(&tuple))
            .expect("the obstruction takes central values");
        lambda.set(&tuple, coords);
    }
    let witness =
        is_coboundary(&module, &lambda).expect("the obstruction cochain is closed");
    let class = CohomologyClass::new(module, lambda.clone())
        .expect("the obstruction cochain is closed");
    let vanishes = witness.is_some();
    let corrected = witness.map(|mu| {
        let mu_h = embed_cochain(&center, &mu, nh);
        let d = ExtensionData::new(g.clone(), h.clone(), alpha.clone(), rho.sub(&mu_h))
            .expect("shapes are preserved");
        assert!(d.check().is_empty(), "subtracting the witness yields valid data");
        d
    });
    Ok(Obstruction { alpha, rho, lambda, center, class, vanishes, corrected })
}

/// All extensions inducing a given outer action, as data: the corrected
/// base datum plus one datum per basis class of degree-2 cohomology of the
/// center module. Errors out — naming a representative — when the
/// obstruction does not vanish.
pub fn enumerate_extensions(action: &OuterAction) -> Result<Vec<ExtensionData>, ExtError> {
    let ob = obstruction(action, None, None)?;
    if !ob.vanishes {
        return Err(ExtError::ObstructionNonzero(ob.class.representative().to_string()));
    }
    let base = ob.corrected.expect("a vanishing obstruction carries corrected data");
    let (center, module) = center_module(base.g(), base.h(), base.alpha());
    let mut result = vec![base.clone()];
    for mu in representatives(&module, 2) {
        let mu_h = embed_cochain(&center, &mu, base.h().dim());
        let d = ExtensionData::new(
            base.g().clone(),
            base.h().clone(),
            base.alpha().to_vec(),
            base.rho().add(&mu_h),
        )
        .expect("shapes are preserved");
        assert!(d.check().is_empty(), "central cocycle shifts preserve validity");
        result.push(d);
    }
    Ok(result)
}

/// The canonical central datum of a kernel algebra `h`: `h` is an extension
/// of its inner quotient `h/Z(h)` by the abelian center, and the correction
/// of the canonical section is a 2-cocycle `ν` whose class is independent
/// of every choice made.
#[derive(Debug, Clone)]
pub struct CentralClass {
    /// `h/Z(h)`, the inner quotient.
    pub quotient: LieAlgebra,
    /// `h → h/Z(h)` in quotient coordinates.
    pub projection: LinearMap,
    /// The canonical linear section of the projection.
    pub section: LinearMap,
    /// `ν(X̄,Ȳ) = [sX̄, sȲ] − s[X̄,Ȳ]` in center coordinates.
    pub nu: SkewCochain,
    /// The class of `ν` over the trivial module (the quotient acts on the
    /// center by brackets, which vanish).
    pub class: CohomologyClass,
    /// Present when an outer action was supplied.
    pub invariance: Option<InvarianceReport>,
}

/// Whether the canonical central class is fixed by an outer action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub invariant: bool,
    /// The action convention the check uses — stated explicitly because the
    /// invariance statement leaves it implicit.
    pub convention: &'static str,
}

const INVARIANCE_CONVENTION: &str = "a generator moves a representative through the stored \
     echelon lift, acting on values by restriction to the center and on arguments by the \
     induced quotient maps; invariance is decided at the level of classes, where it does \
     not depend on the lift";

/// Compute the canonical central datum of `h`, optionally reporting whether
/// an outer action fixes its class.
pub fn central_class(
    h: &LieAlgebra,
    action: Option<&OuterAction>,
) -> Result<CentralClass, ExtError> {
    let center = h.center();
    let z = center.dim();
    let zalg = LieAlgebra::abelian(format!("z({})", h.name()), z);
    let (qalg, projection) =
        h.quotient_algebra(&center).expect("the center is an ideal");
    let quotient = Quotient::new(h.dim(), center.clone());
    let section = LinearMap::from_images(h.dim(), quotient.representatives().to_vec());
    let inclusion = LinearMap::from_images(h.dim(), center.basis().to_vec());
    let ext = Extension::new(
        qalg.clone(),
        zalg,
        h.clone(),
        inclusion,
        projection.clone(),
        Some(section.clone()),
    )
    .expect("the center presents h as an extension of its inner quotient");
    let data = extract(&ext, &section).expect("the stored section is a section");
    assert!(data.alpha().iter().all(|m| m.is_zero()), "brackets into the center vanish");
    let nu = data.rho().clone();
    let module = Representation::trivial(qalg.clone(), z);
    let class = CohomologyClass::new(module.clone(), nu.clone())
        .expect("the correction of an extension is closed");

    let invariance = match action {
        None => None,
        Some(action) => {
            if action.out().source() != h {
                return Err(ExtError::OuterMismatch);
            }
            let out = action.out();
            let qdim = qalg.dim();
            let mut invariant = true;
            for k in 0..action.g().dim() {
                let dmat = out.lift_matrix(action.image(k));
                let dz_cols = center
                    .basis()
                    .iter()
                    .map(|v| {
                        center
                            .coordinates_of(&dmat.mul_vec(v))
                            .expect("derivations preserve the center")
                    })
                    .collect();
                let dz = Matrix::from_cols(z, dz_cols);
                let dq = projection.matrix().mul(&dmat).mul(section.matrix());
                let mut moved = SkewCochain::zero(2, qdim, z);
                for tuple in increasing_tuples(qdim, 2) {
                    let mut value = dz.mul_vec(nu.get(&tuple));
                    let mut unit_i = vec_zero(qdim);
                    unit_i[tuple[0]] = rat(1);
                    let mut unit_j = vec_zero(qdim);
                    unit_j[tuple[1]] = rat(1);
                    let left = nu.eval_vectors(&[dq.col(tuple[0]), unit_j.clone()]);
                    let right = nu.eval_vectors(&[unit_i, dq.col(tuple[1])]);
                    for ((v, l), r) in value.iter_mut().zip(&left).zip(&right) {
                        *v -= l;
                        *v -= r;
                    }
                    moved.set(&tuple, value);
                }
                let witness = is_coboundary(&module, &moved)
                    .expect("the moved representative remains closed");
                if witness.is_none() {
                    invariant = false;
                }
            }
            Some(InvarianceReport { invariant, convention: INVARIANCE_CONVENTION })
        }
    };

    Ok(CentralClass { quotient: qalg, projection, section, nu, class, invariance })
}
