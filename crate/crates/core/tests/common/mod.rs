#![allow(dead_code)]

use decohere::correlations::MeasurementBasis;
use decohere::{build_density, make_channel, Bipartition, ChannelKind, DensityMatrix, Matrix, StateFamily, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<C64> {
    let v: Vec<C64> = (0..dim).map(|_| gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// `G G^dagger / tr` with `G` a `2^n x rank` Ginibre matrix.
pub fn random_density(rng: &mut ChaCha8Rng, num_qubits: usize, rank: usize) -> DensityMatrix {
    let dim = 1usize << num_qubits;
    let g: Vec<C64> = (0..dim * rank).map(|_| gaussian(rng)).collect();
    let mut m = Matrix::from_fn(dim, |i, j| (0..rank).map(|r| g[i * rank + r] * g[j * rank + r].conj()).sum());
    let tr = m.trace().re;
    m = m.scale(1.0 / tr);
    DensityMatrix::new(num_qubits, m).expect("valid random state")
}

/// Haar-random element of SU(2).
pub fn random_unitary2(rng: &mut ChaCha8Rng) -> Matrix {
    let v = random_vector(rng, 2);
    let (a, b) = (v[0], v[1]);
    Matrix::from_vec(2, vec![a, -b.conj(), b, a.conj()]).unwrap()
}

/// `I ⊗ u ⊗ I` with `u` on `qubit` of an `n`-qubit register.
pub fn embed(u: &Matrix, qubit: usize, num_qubits: usize) -> Matrix {
    let mut out = Matrix::identity(1);
    for q in 0..num_qubits {
        let f = if q == qubit { u.clone() } else { Matrix::identity(2) };
        out = out.kron(&f);
    }
    out
}

pub fn random_product_state(rng: &mut ChaCha8Rng, num_qubits: usize) -> DensityMatrix {
    let mut out: Option<DensityMatrix> = None;
    for _ in 0..num_qubits {
        let q = DensityMatrix::new(1, Matrix::outer(&random_vector(rng, 2))).unwrap();
        out = Some(match out {
            Some(acc) => acc.tensor(&q),
            None => q,
        });
    }
    out.unwrap()
}

/// Mixture of `terms` random product states with random weights.
pub fn random_separable(rng: &mut ChaCha8Rng, num_qubits: usize, terms: usize) -> DensityMatrix {
    let w: Vec<f64> = (0..terms).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = w.iter().sum();
    let parts: Vec<(f64, DensityMatrix)> =
        w.iter().map(|x| (x / total, random_product_state(rng, num_qubits))).collect();
    DensityMatrix::mixture(&parts).unwrap()
}

/// Orthonormal single-qubit basis from a Haar-random unitary.
pub fn random_basis_k1(rng: &mut ChaCha8Rng) -> MeasurementBasis {
    let u = random_unitary2(rng);
    let col = |c: usize| vec![u[(0, c)], u[(1, c)]];
    MeasurementBasis::from_vectors(vec![col(0), col(1)]).unwrap()
}

pub fn min_eigenvalue(rho: &DensityMatrix) -> f64 {
    rho.matrix().hermitian_eigenvalues().unwrap()[0]
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

/// Noisy named states and random mixed states, all with one measured qubit.
pub fn seed_corpus() -> Vec<(DensityMatrix, Bipartition)> {
    let mut out = Vec::new();
    for kind in ChannelKind::ALL {
        for p in [0.2, 0.5, 0.8] {
            for fam in [StateFamily::hcnm(3, 1, 1), StateFamily::ghz(3, 1), StateFamily::g_state(3)] {
                let rho = make_channel(kind, p).unwrap().apply_all(&build_density(&fam).unwrap());
                out.push((rho, fam.bipartition()));
            }
        }
    }
    let mut r = rng(11);
    for n in [2, 3] {
        for rank in [1, 2, 4] {
            out.push((random_density(&mut r, n, rank), Bipartition::split(1, n).unwrap()));
        }
    }
    out
}
