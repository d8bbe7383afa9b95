//! Dense square complex matrices and the Hermitian eigensolver.
//!
//! Storage is row-major. Eigenvalue work is delegated to `faer`; when every
//! imaginary part is exactly zero the real symmetric routine is used instead,
//! which is two to three times faster for the real states this crate mostly
//! handles.

use std::ops::{Index, IndexMut};

use faer::{Mat, Side};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<C64>,
}

/// Eigenvalues in nondecreasing order with eigenvectors stored as columns.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Self { dim, data }
    }

    /// Wraps row-major data; fails unless `data.len() == dim * dim`.
    pub fn from_vec(dim: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Domain(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                data.len()
            )));
        }
        Ok(Self { dim, data })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Domain("matrix rows must be square".into()));
            }
            data.extend(row.iter().map(|&x| C64::new(x, 0.0)));
        }
        Ok(Self { dim, data })
    }

    /// `|v><v|` for a column vector `v`.
    pub fn outer(v: &[C64]) -> Self {
        Self::from_fn(v.len(), |r, c| v[r] * v[c].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn data(&self) -> &[C64] {
        &self.data
    }

    #[inline]
    pub(crate) fn data_mut(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)])
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    /// True when every imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        let n = self.dim;
        self.data.iter().enumerate().all(|(i, z)| i / n == i % n || (z.re == 0.0 && z.im == 0.0))
    }

    /// `max |A - A^dagger|` over all entries.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[r * n..(r + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`, with `self` on the leading factor.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (n, m) = (self.dim, other.dim);
        Matrix::from_fn(n * m, |r, c| self[(r / m, c / m)] * other[(r % m, c % m)])
    }

    /// Eigenvalues of a Hermitian matrix, nondecreasing. Only the lower
    /// triangle is read.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        let n = self.dim;
        if n == 0 {
            return Ok(Vec::new());
        }
        if n == 1 {
            return Ok(vec![self.data[0].re]);
        }
        let blocks = self.coupled_blocks();
        if blocks.len() == 1 {
            return self.block_eigenvalues();
        }
        let mut out = Vec::with_capacity(n);
        for idx in blocks {
            if idx.len() == 1 {
                out.push(self.data[idx[0] * n + idx[0]].re);
                continue;
            }
            let sub = Matrix::from_fn(idx.len(), |r, c| self.data[idx[r] * n + idx[c]]);
            out.extend(sub.block_eigenvalues()?);
        }
        out.sort_by(f64::total_cmp);
        Ok(out)
    }

    fn block_eigenvalues(&self) -> Result<Vec<f64>> {
        if let Some(v) = self.raw_eigenvalues() {
            return Ok(v);
        }
        self.reflected().raw_eigenvalues().ok_or(Error::Eigen)
    }

    /// Index sets of the connected components of the nonzero pattern of the
    /// lower triangle, each sorted.
    fn coupled_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.dim;
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for r in 0..n {
            for c in 0..r {
                if self.data[r * n + c] != ZERO {
                    let (a, b) = (root(&mut parent, r), root(&mut parent, c));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            let r = root(&mut parent, i);
            groups[r].push(i);
        }
        groups.retain(|g| !g.is_empty());
        groups
    }

    fn raw_eigenvalues(&self) -> Option<Vec<f64>> {
        let n = self.dim;
        if self.is_real() {
            let m = Mat::<f64>::from_fn(n, n, |r, c| self.data[r * n + c].re);
            if let Ok(v) = m.self_adjoint_eigenvalues(Side::Lower) {
                return Some(v);
            }
        }
        let m = Mat::<C64>::from_fn(n, n, |r, c| self.data[r * n + c]);
        m.self_adjoint_eigenvalues(Side::Lower).ok()
    }

    /// Full eigendecomposition of a Hermitian matrix, eigenvalues
    /// nondecreasing and eigenvectors in the columns.
    pub fn hermitian_eigen(&self) -> Result<HermitianEigen> {
        if let Some(e) = self.raw_eigen() {
            return Ok(e);
        }
        let h = householder(self.dim);
        let e = self.reflected().raw_eigen().ok_or(Error::Eigen)?;
        Ok(HermitianEigen { values: e.values, vectors: h.matmul(&e.vectors) })
    }

    fn raw_eigen(&self) -> Option<HermitianEigen> {
        let n = self.dim;
        if self.is_real() {
            let m = Mat::<f64>::from_fn(n, n, |r, c| self.data[r * n + c].re);
            if let Ok(evd) = m.self_adjoint_eigen(Side::Lower) {
                let (u, s) = (evd.U(), evd.S());
                return Some(HermitianEigen {
                    values: (0..n).map(|i| s[i]).collect(),
                    vectors: Matrix::from_fn(n, |r, c| C64::new(u[(r, c)], 0.0)),
                });
            }
        }
        let m = Mat::<C64>::from_fn(n, n, |r, c| self.data[r * n + c]);
        let evd = m.self_adjoint_eigen(Side::Lower).ok()?;
        let (u, s) = (evd.U(), evd.S());
        Some(HermitianEigen { values: (0..n).map(|i| s[i].re).collect(), vectors: Matrix::from_fn(n, |r, c| u[(r, c)]) })
    }

    /// `H A H` for the fixed reflection of `householder`; same spectrum.
    fn reflected(&self) -> Matrix {
        let h = householder(self.dim);
        h.matmul(self).matmul(&h)
    }
}

/// `I - 2 u u^T` for a fixed irregular unit vector `u`.
fn householder(dim: usize) -> Matrix {
    let u: Vec<f64> = (0..dim).map(|i| (0.7548776662 * (i as f64 + 1.0)).sin() + 0.1).collect();
    let norm2: f64 = u.iter().map(|x| x * x).sum();
    Matrix::from_fn(dim, |r, c| {
        let delta = if r == c { 1.0 } else { 0.0 };
        C64::new(delta - 2.0 * u[r] * u[c] / norm2, 0.0)
    })
}

impl Index<(usize, usize)> for Matrix {
    type Output = C64;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.dim + c]
    }
}

/// Bit mask of qubit `q` in an `n`-qubit basis index. Qubit 0 is the most
/// significant bit.
#[inline]
pub(crate) fn qubit_mask(n: usize, q: usize) -> usize {
    1usize << (n - 1 - q)
}
