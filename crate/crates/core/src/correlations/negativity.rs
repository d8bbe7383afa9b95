use crate::error::Result;
use crate::states::{Bipartition, DensityMatrix};

use super::partial::partial_transpose;

/// Partial-transpose eigenvalues above this count as non-negative.
pub const NEGATIVE_EIGENVALUE_TOL: f64 = 1e-12;

/// Sum of `|lambda|` over the negative eigenvalues of `rho^{T_micro}`.
pub fn negativity(rho: &DensityMatrix, part: &Bipartition) -> Result<f64> {
    let eigs = partial_transpose(rho, part)?.hermitian_eigenvalues()?;
    Ok(eigs.iter().filter(|&&l| l < -NEGATIVE_EIGENVALUE_TOL).map(|l| -l).sum())
}

/// `E_N = log2(2 N(rho) + 1)` in ebits.
pub fn log_negativity(rho: &DensityMatrix, part: &Bipartition) -> Result<f64> {
    Ok((2.0 * negativity(rho, part)? + 1.0).log2())
}
