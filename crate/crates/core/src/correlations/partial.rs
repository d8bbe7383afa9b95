use crate::error::{domain, Result};
use crate::linalg::{qubit_mask, Matrix, ZERO};
use crate::states::{Bipartition, DensityMatrix};

/// Maps each value of a sub-register (first listed qubit most significant)
/// to its bit pattern inside the full `n`-qubit index.
pub(crate) fn embed_table(n: usize, qubits: &[usize]) -> Vec<usize> {
    let len = qubits.len();
    (0..1usize << len)
        .map(|v| {
            qubits
                .iter()
                .enumerate()
                .filter(|(i, _)| v >> (len - 1 - i) & 1 == 1)
                .fold(0, |acc, (_, &q)| acc | qubit_mask(n, q))
        })
        .collect()
}

/// Reduced state on `keep`, in the order listed.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.num_qubits();
    if keep.is_empty() {
        return Err(domain("partial trace needs at least one kept qubit"));
    }
    let mut seen = vec![false; n];
    for &q in keep {
        if q >= n || std::mem::replace(&mut seen[q], true) {
            return Err(domain(format!("kept qubit {q} is out of range or repeated")));
        }
    }
    let traced: Vec<usize> = (0..n).filter(|q| !seen[*q]).collect();
    let kept_map = embed_table(n, keep);
    let traced_map = embed_table(n, &traced);
    let out_dim = kept_map.len();
    let m = rho.matrix();
    let mut out = Matrix::zeros(out_dim);
    for (r, &rb) in kept_map.iter().enumerate() {
        for (c, &cb) in kept_map.iter().enumerate() {
            out[(r, c)] = traced_map.iter().map(|&t| m[(rb | t, cb | t)]).sum();
        }
    }
    Ok(DensityMatrix::from_matrix_unchecked(keep.len(), out))
}

/// Transpose on the qubits of `qubits` only.
pub fn partial_transpose_on(rho: &DensityMatrix, qubits: &[usize]) -> Result<Matrix> {
    let n = rho.num_qubits();
    let mut mask = 0usize;
    for &q in qubits {
        if q >= n {
            return Err(domain(format!("qubit {q} out of range for {n} qubits")));
        }
        mask |= qubit_mask(n, q);
    }
    let dim = rho.dim();
    let src = rho.matrix().data();
    let mut out = vec![ZERO; dim * dim];
    for r in 0..dim {
        for c in 0..dim {
            let rr = (r & !mask) | (c & mask);
            let cc = (c & !mask) | (r & mask);
            out[rr * dim + cc] = src[r * dim + c];
        }
    }
    Matrix::from_vec(dim, out)
}

/// `rho^{T_micro}`: Hermitian with unit trace, possibly indefinite.
pub fn partial_transpose(rho: &DensityMatrix, part: &Bipartition) -> Result<Matrix> {
    part.check(rho.num_qubits())?;
    partial_transpose_on(rho, part.micro())
}
