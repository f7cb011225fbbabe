//! Alternating multilinear maps `Λᵖg → V` and the operators that act on
//! them: the Chevalley differential `d`, the graded wedge bracket, the
//! action operator `α_∧`, and the covariant exterior differential
//! `δ_α = α_∧ + d`.

mod ops;

use thiserror::Error;

use crate::lie::Representation;
use crate::linalg::{vec_add, vec_is_zero, vec_scale, vec_sub, vec_zero, Matrix, Rat};

pub use ops::{alpha_wedge, chevalley_d, delta, wedge_bracket};

/// Shape violation between cochains, actions, and algebras.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CochainError {
    #[error("source dimension mismatch: expected {expected}, found {found}")]
    SourceMismatch { expected: usize, found: usize },
    #[error("target dimension mismatch: expected {expected}, found {found}")]
    TargetMismatch { expected: usize, found: usize },
    #[error("action matrix count {found} does not match source dimension {expected}")]
    ActionCount { expected: usize, found: usize },
    #[error("action matrix {index} is {rows}x{cols}, expected square of size {expected}")]
    ActionShape { index: usize, rows: usize, cols: usize, expected: usize },
}

/// `n choose k` as a machine integer (dimensions stay far below overflow).
pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All strictly increasing `p`-tuples over `{0, …, n−1}` in lexicographic
/// order; this is the index order of [`SkewCochain`] storage.
pub fn increasing_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, p));
    let mut current = Vec::with_capacity(p);
    fn rec(n: usize, p: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == p {
            out.push(current.clone());
            return;
        }
        let remaining = p - current.len();
        for v in start..=n.saturating_sub(remaining) {
            current.push(v);
            rec(n, p, v + 1, current, out);
            current.pop();
        }
    }
    if p <= n {
        rec(n, p, 0, &mut current, &mut out);
    }
    out
}

/// Position of a strictly increasing tuple in lexicographic order.
pub(crate) fn tuple_rank(n: usize, tuple: &[usize]) -> usize {
    let p = tuple.len();
    let mut rank = 0;
    let mut prev = 0; // next admissible value
    for (i, &t) in tuple.iter().enumerate() {
        for v in prev..t {
            rank += binomial(n - 1 - v, p - 1 - i);
        }
        prev = t + 1;
    }
    rank
}

/// Sorts indices ascending, tracking the permutation sign. `None` when an
/// index repeats (an alternating map vanishes there).
pub(crate) fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = indices.to_vec();
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// A degree-`p` alternating multilinear map `Λᵖ(source) → target`, stored
/// densely by strictly increasing source-index tuples.
///
/// Degree 0 is a single target vector; evaluation on arbitrary index tuples
/// extends alternately (repeated index ⇒ zero, swap ⇒ sign flip). The pair
/// `ρ`, the obstruction cochain `λ`, central shifts `μ`, the class cochain
/// `ν`, and witnesses `b` viewed as 1-cochains all live in this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCochain {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    /// One value per increasing tuple, in lexicographic tuple order.
    entries: Vec<Vec<Rat>>,
}

impl SkewCochain {
    pub fn zero(degree: usize, source_dim: usize, target_dim: usize) -> Self {
        let slots = binomial(source_dim, degree);
        SkewCochain {
            degree,
            source_dim,
            target_dim,
            entries: vec![vec_zero(target_dim); slots],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Number of stored values, `C(source_dim, degree)`.
    pub fn slots(&self) -> usize {
        self.entries.len()
    }

    /// The stored value on a strictly increasing tuple.
    pub fn get(&self, tuple: &[usize]) -> &[Rat] {
        debug_assert!(tuple.windows(2).all(|w| w[0] < w[1]), "tuple must be increasing");
        assert_eq!(tuple.len(), self.degree, "tuple length must equal the degree");
        &self.entries[tuple_rank(self.source_dim, tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], value: Vec<Rat>) {
        assert!(tuple.windows(2).all(|w| w[0] < w[1]), "tuple must be increasing");
        assert_eq!(tuple.len(), self.degree, "tuple length must equal the degree");
        assert!(tuple.iter().all(|&t| t < self.source_dim), "index out of range");
        assert_eq!(value.len(), self.target_dim, "value has wrong target dimension");
        let rank = tuple_rank(self.source_dim, tuple);
        self.entries[rank] = value;
    }

    /// Alternating evaluation on an arbitrary index tuple.
    pub fn eval_indices(&self, indices: &[usize]) -> Vec<Rat> {
        assert_eq!(indices.len(), self.degree, "tuple length must equal the degree");
        match sort_with_sign(indices) {
            None => vec_zero(self.target_dim),
            Some((sorted, sign)) => {
                let v = self.get(&sorted);
                if sign >= 0 {
                    v.to_vec()
                } else {
                    v.iter().map(|x| -x.clone()).collect()
                }
            }
        }
    }

    /// Full multilinear evaluation on coefficient vectors: the value is
    /// `Σ_T det(args restricted to rows T) · value(T)` over increasing `T`.
    pub fn eval_vectors(&self, args: &[Vec<Rat>]) -> Vec<Rat> {
        assert_eq!(args.len(), self.degree, "argument count must equal the degree");
        for a in args {
            assert_eq!(a.len(), self.source_dim, "argument has wrong length");
        }
        let mut out = vec_zero(self.target_dim);
        for tuple in increasing_tuples(self.source_dim, self.degree) {
            let minor = Matrix::from_fn(self.degree, self.degree, |l, k| {
                args[k][tuple[l]].clone()
            });
            let c = minor.det();
            if !num_traits::Zero::is_zero(&c) {
                let val = self.get(&tuple);
                for (o, x) in out.iter_mut().zip(val) {
                    *o += &c * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &SkewCochain) -> SkewCochain {
        self.zip_with(other, vec_add)
    }

    pub fn sub(&self, other: &SkewCochain) -> SkewCochain {
        self.zip_with(other, vec_sub)
    }

    pub fn scale(&self, c: &Rat) -> SkewCochain {
        SkewCochain {
            degree: self.degree,
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            entries: self.entries.iter().map(|v| vec_scale(c, v)).collect(),
        }
    }

    pub fn neg(&self) -> SkewCochain {
        self.scale(&crate::linalg::rat(-1))
    }

    fn zip_with(&self, other: &SkewCochain, f: impl Fn(&[Rat], &[Rat]) -> Vec<Rat>) -> SkewCochain {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        assert_eq!(self.source_dim, other.source_dim, "source mismatch");
        assert_eq!(self.target_dim, other.target_dim, "target mismatch");
        SkewCochain {
            degree: self.degree,
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| vec_is_zero(v))
    }

    /// Flatten to a single coordinate vector, tuple-major then target
    /// coordinate — the coordinates cohomology matrices act on.
    pub fn flatten(&self) -> Vec<Rat> {
        self.entries.iter().flat_map(|v| v.iter().cloned()).collect()
    }

    /// Inverse of [`SkewCochain::flatten`].
    pub fn from_flat(degree: usize, source_dim: usize, target_dim: usize, data: Vec<Rat>) -> Self {
        let slots = binomial(source_dim, degree);
        assert_eq!(data.len(), slots * target_dim, "flat data length mismatch");
        let entries = data.chunks(target_dim.max(1)).map(|c| c.to_vec()).collect::<Vec<_>>();
        let entries = if target_dim == 0 { vec![Vec::new(); slots] } else { entries };
        SkewCochain { degree, source_dim, target_dim, entries }
    }

    /// View a linear map `g → V` as a 1-cochain.
    pub fn from_linear_map(map: &crate::lie::LinearMap) -> Self {
        let mut c = SkewCochain::zero(1, map.domain_dim(), map.codomain_dim());
        for i in 0..map.domain_dim() {
            c.set(&[i], map.image_of_basis(i));
        }
        c
    }

    /// The degree-1 case back as a linear map.
    pub fn to_linear_map(&self) -> crate::lie::LinearMap {
        assert_eq!(self.degree, 1, "only degree-1 cochains are linear maps");
        crate::lie::LinearMap::from_images(
            self.target_dim,
            (0..self.source_dim).map(|i| self.get(&[i]).to_vec()).collect(),
        )
    }
}

/// Lists the nonzero entries as `(tuple) -> [coefficients]`; the zero
/// cochain prints as `0`.
impl std::fmt::Display for SkewCochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for tuple in increasing_tuples(self.source_dim, self.degree) {
            let value = self.get(&tuple);
            if vec_is_zero(value) {
                continue;
            }
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            let indices: Vec<String> = tuple.iter().map(|i| i.to_string()).collect();
            let coeffs: Vec<String> = value.iter().map(|c| c.to_string()).collect();
            write!(f, "({}) -> [{}]", indices.join(","), coeffs.join(", "))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The coefficient data for the operators: either a genuine module action
/// (a [`Representation`]) or a raw linear family of matrices with no
/// homomorphism requirement — the latter is what a linear lift `α` of an
/// outer action is before its curvature is accounted for.
#[derive(Debug, Clone, PartialEq)]
pub enum ActionSpec {
    Module(Representation),
    Linear { target_dim: usize, matrices: Vec<Matrix> },
}

impl ActionSpec {
    /// Raw family of action matrices, one per source basis element.
    pub fn linear(
        source_dim: usize,
        target_dim: usize,
        matrices: Vec<Matrix>,
    ) -> Result<Self, CochainError> {
        if matrices.len() != source_dim {
            return Err(CochainError::ActionCount { expected: source_dim, found: matrices.len() });
        }
        for (index, m) in matrices.iter().enumerate() {
            if m.rows() != target_dim || m.cols() != target_dim {
                return Err(CochainError::ActionShape {
                    index,
                    rows: m.rows(),
                    cols: m.cols(),
                    expected: target_dim,
                });
            }
        }
        Ok(ActionSpec::Linear { target_dim, matrices })
    }

    /// The zero action.
    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        ActionSpec::Linear {
            target_dim,
            matrices: vec![Matrix::zeros(target_dim, target_dim); source_dim],
        }
    }

    pub fn source_dim(&self) -> usize {
        match self {
            ActionSpec::Module(r) => r.algebra().dim(),
            ActionSpec::Linear { matrices, .. } => matrices.len(),
        }
    }

    pub fn target_dim(&self) -> usize {
        match self {
            ActionSpec::Module(r) => r.space_dim(),
            ActionSpec::Linear { target_dim, .. } => *target_dim,
        }
    }

    /// The action matrix of the `i`-th source basis element.
    pub fn matrix(&self, i: usize) -> &Matrix {
        match self {
            ActionSpec::Module(r) => r.action_of_basis(i),
            ActionSpec::Linear { matrices, .. } => &matrices[i],
        }
    }
}
