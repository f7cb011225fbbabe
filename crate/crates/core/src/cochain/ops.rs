//! The four operators on skew cochains.
//!
//! Sign conventions are fixed operationally, not by transcription: `d∘d = 0`
//! and the curvature identity `δ_α δ_α φ = [ρ, φ]_∧` are executable tests
//! (see the property suites), so a sign drift in any of these operators
//! breaks the build rather than silently corrupting classifications.

use num_traits::Zero;

use crate::lie::LieAlgebra;
use crate::linalg::{vec_add_scaled, vec_is_zero, vec_zero};

use super::{increasing_tuples, ActionSpec, CochainError, SkewCochain};

fn check_source(phi: &SkewCochain, expected: usize) -> Result<(), CochainError> {
    if phi.source_dim() != expected {
        return Err(CochainError::SourceMismatch { expected, found: phi.source_dim() });
    }
    Ok(())
}

/// The Chevalley differential with trivial coefficients:
///
/// `dφ(X₀,…,X_p) = Σ_{i<j} (−1)^{i+j} φ([Xᵢ,Xⱼ], X₀,…,X̂ᵢ,…,X̂ⱼ,…,X_p)`.
///
/// The action term is deliberately absent — combine with [`alpha_wedge`]
/// via [`delta`] for the covariant differential. Over an abelian algebra
/// this operator is identically zero.
pub fn chevalley_d(g: &LieAlgebra, phi: &SkewCochain) -> Result<SkewCochain, CochainError> {
    check_source(phi, g.dim())?;
    let p = phi.degree();
    let mut out = SkewCochain::zero(p + 1, phi.source_dim(), phi.target_dim());
    for tuple in increasing_tuples(phi.source_dim(), p + 1) {
        let mut val = vec_zero(phi.target_dim());
        for i in 0..tuple.len() {
            for j in i + 1..tuple.len() {
                let bracket = g.bracket_basis(tuple[i], tuple[j]);
                // Remaining arguments with positions i and j removed, the
                // bracket slot prepended.
                let rest: Vec<usize> = tuple
                    .iter()
                    .enumerate()
                    .filter(|&(pos, _)| pos != i && pos != j)
                    .map(|(_, &t)| t)
                    .collect();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                for (k, c) in bracket.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut args = Vec::with_capacity(p);
                    args.push(k);
                    args.extend_from_slice(&rest);
                    let term = phi.eval_indices(&args);
                    if !vec_is_zero(&term) {
                        let coeff = if sign > 0 { c.clone() } else { -c.clone() };
                        vec_add_scaled(&mut val, &coeff, &term);
                    }
                }
            }
        }
        out.set(&tuple, val);
    }
    Ok(out)
}

/// The graded wedge bracket of two cochains with values in one Lie algebra
/// `f`:
///
/// `[φ,ψ]_∧(X₁,…,X_{p+q}) = (1/p!q!) Σ_σ sign(σ) [φ(X_{σ(1)},…), ψ(…)]_f`.
///
/// Implemented as the equivalent sum over (p,q)-shuffles — both cochains are
/// alternating, so each shuffle term collects exactly `p!q!` equal
/// permutation terms. (The test suite checks this against the literal
/// permutation sum.) Satisfies `[φ,ψ]_∧ = −(−1)^{pq} [ψ,φ]_∧`.
pub fn wedge_bracket(
    f: &LieAlgebra,
    phi: &SkewCochain,
    psi: &SkewCochain,
) -> Result<SkewCochain, CochainError> {
    if phi.source_dim() != psi.source_dim() {
        return Err(CochainError::SourceMismatch {
            expected: phi.source_dim(),
            found: psi.source_dim(),
        });
    }
    for c in [phi, psi] {
        if c.target_dim() != f.dim() {
            return Err(CochainError::TargetMismatch { expected: f.dim(), found: c.target_dim() });
        }
    }
    let (p, q) = (phi.degree(), psi.degree());
    let mut out = SkewCochain::zero(p + q, phi.source_dim(), f.dim());
    for tuple in increasing_tuples(phi.source_dim(), p + q) {
        let mut val = vec_zero(f.dim());
        // Positions (not indices) given to φ; the complement goes to ψ. The
        // shuffle sign is the parity of Σ positions − (0 + 1 + … + (p−1)).
        for positions in increasing_tuples(p + q, p) {
            let shift: usize = positions.iter().sum::<usize>() - p * (p.saturating_sub(1)) / 2;
            let sign = if shift.is_multiple_of(2) { 1 } else { -1 };
            let phi_args: Vec<usize> = positions.iter().map(|&pos| tuple[pos]).collect();
            let psi_args: Vec<usize> = (0..p + q)
                .filter(|pos| !positions.contains(pos))
                .map(|pos| tuple[pos])
                .collect();
            let a = phi.eval_indices(&phi_args);
            let b = psi.eval_indices(&psi_args);
            if vec_is_zero(&a) || vec_is_zero(&b) {
                continue;
            }
            let term = f.bracket(&a, &b).expect("targets have the algebra dimension");
            let coeff = crate::linalg::rat(sign);
            vec_add_scaled(&mut val, &coeff, &term);
        }
        out.set(&tuple, val);
    }
    Ok(out)
}

/// The action operator:
///
/// `α_∧φ(X₀,…,X_p) = Σᵢ (−1)ⁱ α_{Xᵢ}(φ(X₀,…,X̂ᵢ,…,X_p))`.
///
/// `α` may be a raw linear family — no homomorphism property is used.
pub fn alpha_wedge(alpha: &ActionSpec, phi: &SkewCochain) -> Result<SkewCochain, CochainError> {
    check_source(phi, alpha.source_dim())?;
    if phi.target_dim() != alpha.target_dim() {
        return Err(CochainError::TargetMismatch {
            expected: alpha.target_dim(),
            found: phi.target_dim(),
        });
    }
    let p = phi.degree();
    let mut out = SkewCochain::zero(p + 1, phi.source_dim(), phi.target_dim());
    for tuple in increasing_tuples(phi.source_dim(), p + 1) {
        let mut val = vec_zero(phi.target_dim());
        for (i, &t) in tuple.iter().enumerate() {
            let rest: Vec<usize> = tuple
                .iter()
                .enumerate()
                .filter(|&(pos, _)| pos != i)
                .map(|(_, &x)| x)
                .collect();
            let inner = phi.eval_indices(&rest);
            if vec_is_zero(&inner) {
                continue;
            }
            let acted = alpha.matrix(t).mul_vec(&inner);
            let sign = crate::linalg::rat(if i % 2 == 0 { 1 } else { -1 });
            vec_add_scaled(&mut val, &sign, &acted);
        }
        out.set(&tuple, val);
    }
    Ok(out)
}

/// The covariant exterior differential `δ_α = α_∧ + d`.
///
/// With a genuine module action this is the Chevalley–Eilenberg differential
/// and squares to zero; with a raw linear family its square is the wedge
/// bracket against the curvature.
pub fn delta(
    g: &LieAlgebra,
    alpha: &ActionSpec,
    phi: &SkewCochain,
) -> Result<SkewCochain, CochainError> {
    if alpha.source_dim() != g.dim() {
        return Err(CochainError::SourceMismatch {
            expected: g.dim(),
            found: alpha.source_dim(),
        });
    }
    let action_part = alpha_wedge(alpha, phi)?;
    let bracket_part = chevalley_d(g, phi)?;
    Ok(action_part.add(&bracket_part))
}
