//! Dense rational matrices with exact elimination.

use num_traits::{One, Zero};

use super::subspace::Subspace;
use super::{vec_is_zero, vec_zero, LinalgError, Rat};

/// A dense `rows × cols` matrix of exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Full solution set of a linear system `A·x = y`: one particular solution
/// plus the kernel of `A` describing all others.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub particular: Vec<Rat>,
    pub kernel: Subspace,
}

impl Matrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec_zero(rows * cols) }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Build from explicit rows. All rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged rows");
        }
        let nrows = rows.len();
        Matrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() }
    }

    /// Build from explicit columns.
    pub fn from_cols(ambient_rows: usize, cols: Vec<Vec<Rat>>) -> Self {
        let mut m = Matrix::zeros(ambient_rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), ambient_rows, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Entry-by-entry construction.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    /// Row-major flattening; matrices-as-vectors coordinatize derivation
    /// spaces and other matrix subspaces.
    pub fn flatten(&self) -> Vec<Rat> {
        self.data.clone()
    }

    /// Inverse of [`Matrix::flatten`] for a known shape.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "flat data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| c * self.get(i, j))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|k| self.get(i, k) * &v[k]).sum())
            .collect()
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Reduced row echelon form together with the pivot column indices.
    /// Pivots are leading ones with zeros above and below; pivot columns are
    /// strictly increasing. This is the canonical form behind every subspace
    /// comparison in the crate.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(src) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if src != row {
                for j in 0..m.cols {
                    m.data.swap(row * m.cols + j, src * m.cols + j);
                }
            }
            let inv = {
                let p = m.get(row, col).clone();
                Rat::one() / p
            };
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &factor * m.get(row, j);
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solve `self·x = y` exactly. `None` means the system is inconsistent;
    /// otherwise the particular solution has zeros in all free coordinates
    /// and the kernel spans the full solution set.
    pub fn solve(&self, y: &[Rat]) -> Result<Option<Solution>, LinalgError> {
        if y.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: y.len() });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, rhs) in y.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs.clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // a row reads 0 = 1
        }
        let mut particular = vec_zero(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = red.get(r, self.cols).clone();
        }
        Ok(Some(Solution { particular, kernel: self.kernel() }))
    }

    /// Null space `{v : self·v = 0}` as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec_zero(self.cols);
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, f).clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis)
    }

    /// Column space as a canonical subspace of the row-count-dimensional
    /// ambient space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, (0..self.cols).map(|j| self.col(j)).collect())
    }

    /// Exact determinant by elimination. Panics on non-square input.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rat::one();
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rat::zero();
            };
            if src != col {
                for j in 0..n {
                    m.data.swap(col * n + j, src * n + j);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if !m.get(r, col).is_zero() {
                    let factor = m.get(r, col) / &pivot;
                    for j in col..n {
                        let v = m.get(r, j) - &factor * m.get(col, j);
                        m.set(r, j, v);
                    }
                }
            }
        }
        det
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
