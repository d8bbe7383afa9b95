use crate::error::{Error, Result};
use crate::states::{Bipartition, DensityMatrix};

use super::partial::partial_trace;

/// Eigenvalues in `[-CLIP_TOL, 0)` are treated as zero before taking logs.
pub const CLIP_TOL: f64 = 1e-10;

pub(crate) fn clip_spectrum(eigs: &mut [f64]) -> Result<()> {
    for l in eigs.iter_mut() {
        if *l < -CLIP_TOL {
            return Err(Error::InvariantViolation(format!("eigenvalue {l:e} is below -{CLIP_TOL:e}")));
        }
        *l = l.max(0.0);
    }
    Ok(())
}

/// Shannon entropy in bits of a clipped spectrum, after scaling by `1/total`.
pub(crate) fn shannon_bits(eigs: &[f64], total: f64) -> f64 {
    -eigs
        .iter()
        .map(|&l| (l / total).min(1.0))
        .filter(|&q| q > 0.0)
        .map(|q| q * q.log2())
        .sum::<f64>()
}

/// Entropy in bits of a unit-trace spectrum.
pub fn entropy_of_spectrum(eigs: &[f64]) -> Result<f64> {
    let mut e = eigs.to_vec();
    clip_spectrum(&mut e)?;
    Ok(shannon_bits(&e, 1.0))
}

/// `S(rho) = -tr rho log2 rho`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    entropy_of_spectrum(&rho.matrix().hermitian_eigenvalues()?)
}

/// `S(rho_micro) + S(rho_macro) - S(rho)`.
pub fn mutual_information(rho: &DensityMatrix, part: &Bipartition) -> Result<f64> {
    part.check(rho.num_qubits())?;
    let s_all = von_neumann_entropy(rho)?;
    mutual_information_given(rho, part, s_all)
}

pub(crate) fn mutual_information_given(rho: &DensityMatrix, part: &Bipartition, s_all: f64) -> Result<f64> {
    let s_micro = von_neumann_entropy(&partial_trace(rho, part.micro())?)?;
    let s_macro = von_neumann_entropy(&partial_trace(rho, part.macro_qubits())?)?;
    Ok(s_micro + s_macro - s_all)
}
