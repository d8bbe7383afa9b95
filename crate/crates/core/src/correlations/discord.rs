//! Quantum discord with the measurement on the micro side.
//!
//! The conditional entropy `sum_i p_i S(rho_macro|i)` is minimized over
//! products of rank-1 projective qubit measurements, one Bloch direction per
//! micro qubit. For a single micro qubit this is the full projective class.
//! For two it is an upper bound, since entangled two-qubit bases are not
//! searched. More than two micro qubits is rejected.
//!
//! The search evaluates a uniform `(theta, phi)` grid and refines the best
//! grid points by compass search with step contraction. Every grid direction
//! has its antipode on the grid, so each outcome spectrum is computed once
//! and shared by the two measurements that contain it. When the state is real,
//! `phi -> -phi` conjugates every post-measurement state, and mirrored grid
//! directions reuse one spectrum.
//!
//! Post-measurement spectra come from one of three equivalent block forms.
//! When `rho` is invariant under permutations of the macro qubits, each
//! conditional state splits into spin sectors with known multiplicities and
//! only one small block per sector is diagonalized. Otherwise, when
//! `rank(rho)` is below `2^(n-k)`, the Gram matrix of the measured
//! square-root factor of `rho` is used; its nonzero spectrum is that of the
//! conditional state. The fallback is the full conditional block.

use std::collections::HashMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{qubit_mask, Matrix, C64, ZERO};
use crate::states::{Bipartition, DensityMatrix};

use super::entropy::{clip_spectrum, mutual_information_given, shannon_bits, von_neumann_entropy, CLIP_TOL};
use super::partial::{embed_table, partial_trace};

/// Outcomes less likely than this contribute nothing.
pub const MIN_OUTCOME_PROBABILITY: f64 = 1e-14;

/// Eigenvalues of `rho` at or below this are dropped from the Gram factor.
const RANK_TOL: f64 = 1e-14;

const DISCORD_CLIP: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct DiscordOptions {
    /// Grid points per angle for one measured qubit: `theta` gets this many
    /// points on `[0, pi]` including both poles, `phi` this many on `[0, 2pi)`.
    pub grid_single: usize,
    /// Grid points per angle when two qubits are measured.
    pub grid_pair: usize,
    /// Upper bound on refinement rounds per start.
    pub max_rounds: usize,
    /// A refinement move must lower the objective by more than this.
    pub tolerance: f64,
    /// Refinement stops once the step has contracted below this (radians).
    pub step_floor: f64,
    /// Distinct grid-local minima refined, best first.
    pub refine_starts: usize,
    /// Extra starts drawn uniformly on the sphere from `seed`.
    pub random_starts: usize,
    pub seed: u64,
}

impl Default for DiscordOptions {
    fn default() -> Self {
        Self {
            grid_single: 64,
            grid_pair: 8,
            max_rounds: 200,
            tolerance: 1e-12,
            step_floor: 1e-7,
            refine_starts: 2,
            random_starts: 1,
            seed: 7,
        }
    }
}

/// A complete rank-1 projective measurement on the micro register.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementBasis {
    /// Bloch angles `(theta, phi)` of the `+` outcome on each micro qubit;
    /// empty for bases not built from angles.
    pub angles: Vec<(f64, f64)>,
    pub projectors: Vec<Matrix>,
    vectors: Vec<Vec<C64>>,
}

fn bloch_vector(theta: f64, phi: f64) -> [C64; 2] {
    [C64::new((theta / 2.0).cos(), 0.0), C64::from_polar((theta / 2.0).sin(), phi)]
}

fn antipode([a, b]: [C64; 2]) -> [C64; 2] {
    // (sin t/2, -e^{i phi} cos t/2): orthogonal to (cos t/2, e^{i phi} sin t/2)
    let r = b.norm();
    let phase = if r > 0.0 { b / r } else { C64::new(1.0, 0.0) };
    [C64::new(r, 0.0), -phase * a.re]
}

fn kron_vectors(parts: &[[C64; 2]]) -> Vec<C64> {
    parts.iter().fold(vec![C64::new(1.0, 0.0)], |acc, v| {
        acc.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect()
    })
}

/// All `2^k` outcome vectors of a product measurement, `+` before `-` on
/// each qubit with the first qubit most significant.
fn product_outcomes(dirs: &[[C64; 2]]) -> Vec<Vec<C64>> {
    let k = dirs.len();
    (0..1usize << k)
        .map(|signs| {
            let parts: Vec<[C64; 2]> = (0..k)
                .map(|q| if signs >> (k - 1 - q) & 1 == 0 { dirs[q] } else { antipode(dirs[q]) })
                .collect();
            kron_vectors(&parts)
        })
        .collect()
}

impl MeasurementBasis {
    /// Product measurement with the `+` outcome of qubit `q` along `angles[q]`.
    pub fn from_angles(angles: &[(f64, f64)]) -> Self {
        let dirs: Vec<[C64; 2]> = angles.iter().map(|&(t, p)| bloch_vector(t, p)).collect();
        let vectors = product_outcomes(&dirs);
        Self { angles: angles.to_vec(), projectors: vectors.iter().map(|v| Matrix::outer(v)).collect(), vectors }
    }

    pub fn computational(k: usize) -> Self {
        Self::from_angles(&vec![(0.0, 0.0); k])
    }

    /// Basis from explicit outcome vectors; they must be orthonormal and complete.
    pub fn from_vectors(vectors: Vec<Vec<C64>>) -> Result<Self> {
        let d = vectors.len();
        if d == 0 || !d.is_power_of_two() || vectors.iter().any(|v| v.len() != d) {
            return Err(Error::Domain("a basis needs 2^k vectors of length 2^k".into()));
        }
        let basis = Self { angles: Vec::new(), projectors: vectors.iter().map(|v| Matrix::outer(v)).collect(), vectors };
        if basis.completeness_defect() > 1e-12 || basis.orthogonality_defect() > 1e-10 {
            return Err(Error::Domain("basis vectors are not orthonormal".into()));
        }
        Ok(basis)
    }

    pub fn vectors(&self) -> &[Vec<C64>] {
        &self.vectors
    }

    pub fn num_qubits(&self) -> usize {
        self.vectors.len().trailing_zeros() as usize
    }

    /// `max |sum_i Pi_i - I|`.
    pub fn completeness_defect(&self) -> f64 {
        let d = self.vectors.len();
        let mut sum = Matrix::zeros(d);
        for p in &self.projectors {
            for (s, x) in sum.data_mut().iter_mut().zip(p.data()) {
                *s += x;
            }
        }
        sum.max_abs_diff(&Matrix::identity(d))
    }

    /// `max |Pi_i Pi_j - delta_ij Pi_i|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.projectors.iter().enumerate() {
            for (j, b) in self.projectors.iter().enumerate() {
                let prod = a.matmul(b);
                let target = if i == j { a.clone() } else { Matrix::zeros(a.dim()) };
                worst = worst.max(prod.max_abs_diff(&target));
            }
        }
        worst
    }
}

#[derive(Clone, Debug)]
pub struct DiscordResult {
    pub discord: f64,
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub optimizer_basis: MeasurementBasis,
    pub optimizer_evals: usize,
}

#[derive(Clone, Debug)]
pub struct ConditionalEntropy {
    pub value: f64,
    pub basis: MeasurementBasis,
    pub evals: usize,
}

/// One invariant block family of the post-measurement states.
///
/// The outcome `e` gives `sum_ab w_ab blocks[a * d + b]`, where `w_ab` is
/// `conj(e_a) e_b` for direct blocks and `e_a conj(e_b)` for Gram blocks;
/// each eigenvalue of the result occurs `multiplicity` times.
struct Sector {
    multiplicity: usize,
    blocks: Vec<Matrix>,
}

/// Precomputed blocks of `rho` seen from the measured side.
struct MeasuredState {
    micro_dim: usize,
    gram: bool,
    sectors: Vec<Sector>,
    real: bool,
}

/// Largest entry change allowed for `rho` to count as invariant under
/// permutations of the macro qubits.
const SYMMETRY_TOL: f64 = 1e-14;

fn macro_permutation_invariant(rho: &DensityMatrix, macro_qubits: &[usize]) -> bool {
    let n = rho.num_qubits();
    let m = rho.matrix();
    let dim = m.dim();
    macro_qubits.windows(2).all(|w| {
        let (x, y) = (qubit_mask(n, w[0]), qubit_mask(n, w[1]));
        let swap = |i: usize| if (i & x == 0) != (i & y == 0) { i ^ x ^ y } else { i };
        (0..dim).all(|r| (0..dim).all(|c| (m[(swap(r), swap(c))] - m[(r, c)]).norm() <= SYMMETRY_TOL))
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// One copy of each spin-`j` irrep of `n` qubits, `j = n/2 - s`: `s` singlet
/// pairs on the leading qubits followed by the Dicke states of the rest.
/// Returns `(multiplicity, basis vectors)` for every `s`.
fn spin_sectors(n: usize) -> Vec<(usize, Vec<Vec<C64>>)> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = [ZERO, C64::new(h, 0.0), C64::new(-h, 0.0), ZERO];
    (0..=n / 2)
        .map(|s| {
            let rest = n - 2 * s;
            let pairs = (0..s).fold(vec![C64::new(1.0, 0.0)], |acc, _| {
                acc.iter().flat_map(|a| singlet.iter().map(move |b| a * b)).collect()
            });
            let vectors = (0..=rest)
                .map(|w| {
                    let d = match rest {
                        0 => vec![C64::new(1.0, 0.0)],
                        _ => crate::states::dicke(rest, w).expect("weight within range").amplitudes().to_vec(),
                    };
                    pairs.iter().flat_map(|a| d.iter().map(move |b| a * b)).collect()
                })
                .collect();
            let multiplicity = binomial(n, s) - if s == 0 { 0 } else { binomial(n, s - 1) };
            (multiplicity, vectors)
        })
        .collect()
}

impl MeasuredState {
    fn new(rho: &DensityMatrix, part: &Bipartition) -> Self {
        let n = rho.num_qubits();
        let micro_map = embed_table(n, part.micro());
        let macro_map = embed_table(n, part.macro_qubits());
        let micro_dim = micro_map.len();
        let macro_dim = macro_map.len();
        let m = rho.matrix();
        let real = m.is_real();
        let direct = |a: usize, b: usize| Matrix::from_fn(macro_dim, |x, y| m[(a | macro_map[x], b | macro_map[y])]);

        if part.macro_qubits().len() > 1 && macro_permutation_invariant(rho, part.macro_qubits()) {
            let direct_blocks: Vec<Matrix> =
                micro_map.iter().flat_map(|&a| micro_map.iter().map(move |&b| (a, b))).map(|(a, b)| direct(a, b)).collect();
            let sectors = spin_sectors(part.macro_qubits().len())
                .into_iter()
                .map(|(multiplicity, basis)| {
                    let blocks = direct_blocks
                        .iter()
                        .map(|blk| {
                            Matrix::from_fn(basis.len(), |i, j| {
                                let mut s = ZERO;
                                for x in 0..macro_dim {
                                    if basis[i][x] == ZERO {
                                        continue;
                                    }
                                    let row: C64 = (0..macro_dim).map(|y| blk[(x, y)] * basis[j][y]).sum();
                                    s += basis[i][x].conj() * row;
                                }
                                s
                            })
                        })
                        .collect();
                    Sector { multiplicity, blocks }
                })
                .collect();
            return Self { micro_dim, gram: false, sectors, real };
        }

        // The Gram form is only a shortcut; without eigenvectors the direct form serves.
        let eig = rho.matrix().hermitian_eigen().ok();
        let kept: Vec<usize> = eig
            .as_ref()
            .map(|e| (0..e.values.len()).filter(|&i| e.values[i] > RANK_TOL).collect())
            .unwrap_or_default();
        if let Some(eig) = eig.as_ref().filter(|_| kept.len() < macro_dim) {
            let r = kept.len();
            // X[row][j] = sqrt(lambda_j) v_j[row]
            let factor: Vec<Vec<C64>> = (0..m.dim())
                .map(|row| kept.iter().map(|&j| eig.vectors[(row, j)] * eig.values[j].sqrt()).collect())
                .collect();
            let mut blocks = Vec::with_capacity(micro_dim * micro_dim);
            for &a in &micro_map {
                for &b in &micro_map {
                    blocks.push(Matrix::from_fn(r, |i, j| {
                        macro_map.iter().map(|&x| factor[a | x][i].conj() * factor[b | x][j]).sum()
                    }));
                }
            }
            return Self { micro_dim, gram: true, sectors: vec![Sector { multiplicity: 1, blocks }], real };
        }

        let blocks = micro_map.iter().flat_map(|&a| micro_map.iter().map(move |&b| (a, b))).map(|(a, b)| direct(a, b)).collect();
        Self { micro_dim, gram: false, sectors: vec![Sector { multiplicity: 1, blocks }], real }
    }

    /// `p_i S(rho_macro|i)` for the outcome vector `e`.
    fn weighted_entropy(&self, e: &[C64]) -> Result<f64> {
        let d = self.micro_dim;
        let mut eigs = Vec::new();
        for sector in &self.sectors {
            let size = sector.blocks[0].dim();
            let mut h = Matrix::zeros(size);
            for a in 0..d {
                for b in 0..d {
                    let coeff = if self.gram { e[a] * e[b].conj() } else { e[a].conj() * e[b] };
                    if coeff == ZERO {
                        continue;
                    }
                    for (dst, src) in h.data_mut().iter_mut().zip(sector.blocks[a * d + b].data()) {
                        *dst += coeff * src;
                    }
                }
            }
            for r in 0..size {
                h[(r, r)].im = 0.0;
            }
            for l in h.hermitian_eigenvalues()? {
                eigs.extend(std::iter::repeat_n(l, sector.multiplicity));
            }
        }
        for l in &eigs {
            if *l < -CLIP_TOL {
                return Err(Error::InvariantViolation(format!("post-measurement eigenvalue {l:e}")));
            }
        }
        clip_spectrum(&mut eigs)?;
        let p: f64 = eigs.iter().sum();
        if p < MIN_OUTCOME_PROBABILITY {
            return Ok(0.0);
        }
        Ok(p * shannon_bits(&eigs, p))
    }

    fn conditional_entropy(&self, outcomes: &[Vec<C64>]) -> Result<f64> {
        outcomes.iter().map(|e| self.weighted_entropy(e)).sum()
    }
}

/// Grid direction `(theta index, phi index)`.
type Dir = (usize, usize);

struct Grid {
    size: usize,
}

impl Grid {
    fn theta(&self, i: usize) -> f64 {
        PI * i as f64 / (self.size - 1) as f64
    }

    fn phi(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.size as f64
    }

    fn at_pole(&self, i: usize) -> bool {
        i == 0 || i == self.size - 1
    }

    fn pole_canonical(&self, (i, j): Dir) -> Dir {
        if self.at_pole(i) { (i, 0) } else { (i, j) }
    }

    fn antipode(&self, (i, j): Dir) -> Dir {
        self.pole_canonical((self.size - 1 - i, (j + self.size / 2) % self.size))
    }

    fn mirrored(&self, (i, j): Dir) -> Dir {
        self.pole_canonical((i, (self.size - j) % self.size))
    }

    /// Key under which a tuple of outcome directions is cached.
    fn canonical(&self, dirs: &[Dir], real: bool) -> Vec<Dir> {
        let key: Vec<Dir> = dirs.iter().map(|&d| self.pole_canonical(d)).collect();
        if !real {
            return key;
        }
        let mirror: Vec<Dir> = key.iter().map(|&d| self.mirrored(d)).collect();
        key.min(mirror)
    }

    fn vector(&self, (i, j): Dir) -> [C64; 2] {
        bloch_vector(self.theta(i), self.phi(j))
    }
}

/// Every tuple of `k` grid directions, first qubit slowest.
fn direction_tuples(grid: &Grid, k: usize) -> Vec<Vec<Dir>> {
    let per_qubit: Vec<Dir> = (0..grid.size).flat_map(|i| (0..grid.size).map(move |j| (i, j))).collect();
    let mut tuples: Vec<Vec<Dir>> = vec![Vec::new()];
    for _ in 0..k {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                per_qubit.iter().map(move |&d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    tuples
}

fn sign_patterns(grid: &Grid, dirs: &[Dir]) -> Vec<Vec<Dir>> {
    let k = dirs.len();
    (0..1usize << k)
        .map(|signs| {
            (0..k)
                .map(|q| if signs >> (k - 1 - q) & 1 == 0 { dirs[q] } else { grid.antipode(dirs[q]) })
                .collect()
        })
        .collect()
}

fn objective(state: &MeasuredState, angles: &[(f64, f64)]) -> Result<f64> {
    let dirs: Vec<[C64; 2]> = angles.iter().map(|&(t, p)| bloch_vector(t, p)).collect();
    state.conditional_entropy(&product_outcomes(&dirs))
}

fn wrap_angles(angles: &mut [(f64, f64)]) {
    for (t, p) in angles.iter_mut() {
        // Reflect theta into [0, pi]; crossing a pole shifts phi by pi.
        *t = t.rem_euclid(2.0 * PI);
        if *t > PI {
            *t = 2.0 * PI - *t;
            *p += PI;
        }
        *p = p.rem_euclid(2.0 * PI);
    }
}

type Refined = (Vec<(f64, f64)>, f64, usize);

/// Compass search from `start`; returns the refined point, its value and the
/// number of objective evaluations.
fn refine(
    state: &MeasuredState,
    start: Vec<(f64, f64)>,
    start_value: f64,
    step0: (f64, f64),
    opts: &DiscordOptions,
) -> Result<Refined> {
    let mut x = start;
    let mut fx = start_value;
    let mut step = step0;
    let mut evals = 0;
    for _ in 0..opts.max_rounds {
        if step.0.max(step.1) < opts.step_floor {
            break;
        }
        let mut best: Option<(Vec<(f64, f64)>, f64)> = None;
        for q in 0..x.len() {
            for (dt, dp) in [(step.0, 0.0), (-step.0, 0.0), (0.0, step.1), (0.0, -step.1)] {
                let mut y = x.clone();
                y[q].0 += dt;
                y[q].1 += dp;
                wrap_angles(&mut y);
                let fy = objective(state, &y)?;
                evals += 1;
                if best.as_ref().is_none_or(|(_, fb)| fy < *fb) {
                    best = Some((y, fy));
                }
            }
        }
        match best {
            Some((y, fy)) if fy < fx - opts.tolerance => {
                x = y;
                fx = fy;
            }
            _ => step = (step.0 / 2.0, step.1 / 2.0),
        }
    }
    Ok((x, fx, evals))
}

/// Conditional entropy of the macro side after measuring the micro side in `basis`.
pub fn conditional_entropy(rho: &DensityMatrix, part: &Bipartition, basis: &MeasurementBasis) -> Result<f64> {
    part.check(rho.num_qubits())?;
    if basis.num_qubits() != part.micro().len() {
        return Err(Error::Domain("basis size does not match the micro register".into()));
    }
    MeasuredState::new(rho, part).conditional_entropy(basis.vectors())
}

/// Minimum over the implemented measurement class of `sum_i p_i S(rho_macro|i)`.
pub fn min_conditional_entropy(rho: &DensityMatrix, part: &Bipartition) -> Result<(f64, MeasurementBasis)> {
    let r = min_conditional_entropy_with(rho, part, &DiscordOptions::default())?;
    Ok((r.value, r.basis))
}

pub fn min_conditional_entropy_with(
    rho: &DensityMatrix,
    part: &Bipartition,
    opts: &DiscordOptions,
) -> Result<ConditionalEntropy> {
    part.check(rho.num_qubits())?;
    minimize(rho, part, opts)
}

fn minimize(rho: &DensityMatrix, part: &Bipartition, opts: &DiscordOptions) -> Result<ConditionalEntropy> {
    let k = part.micro().len();
    let size = match k {
        1 => opts.grid_single,
        2 => opts.grid_pair,
        _ => {
            return Err(Error::Unsupported(format!(
                "discord is implemented for 1 or 2 measured qubits, got {k}"
            )))
        }
    };
    if size < 2 || size % 2 != 0 {
        return Err(Error::Domain(format!("grid size {size} must be even and at least 2")));
    }
    let state = MeasuredState::new(rho, part);

    // Classical states: the computational basis leaves the macro side untouched.
    if rho.matrix().is_diagonal() {
        let basis = MeasurementBasis::computational(k);
        let value = state.conditional_entropy(basis.vectors())?;
        return Ok(ConditionalEntropy { value, basis, evals: 1 });
    }

    let grid = Grid { size };
    let tuples = direction_tuples(&grid, k);

    let mut keys: Vec<Vec<Dir>> = tuples.iter().map(|t| grid.canonical(t, state.real)).collect();
    keys.sort_unstable();
    keys.dedup();
    let values: Vec<f64> = keys
        .par_iter()
        .map(|key| {
            let parts: Vec<[C64; 2]> = key.iter().map(|&d| grid.vector(d)).collect();
            state.weighted_entropy(&kron_vectors(&parts))
        })
        .collect::<Result<_>>()?;
    let cache: HashMap<&Vec<Dir>, f64> = keys.iter().zip(values).collect();

    let scores: Vec<f64> = tuples
        .iter()
        .map(|t| sign_patterns(&grid, t).iter().map(|o| cache[&grid.canonical(o, state.real)]).sum())
        .collect();
    let mut evals = tuples.len();

    let index_of = |dirs: &[Dir]| dirs.iter().fold(0, |acc, &(i, j)| acc * size * size + i * size + j);
    let is_local_min = |t: &Vec<Dir>, s: f64| {
        (0..k).all(|q| {
            let (i, j) = t[q];
            let mut nbrs = vec![(i, (j + 1) % size), (i, (j + size - 1) % size)];
            if i > 0 {
                nbrs.push((i - 1, j));
            }
            if i + 1 < size {
                nbrs.push((i + 1, j));
            }
            nbrs.into_iter().all(|d| {
                let mut u = t.clone();
                u[q] = d;
                scores[index_of(&u)] >= s
            })
        })
    };

    let mut order: Vec<usize> = (0..tuples.len()).collect();
    order.sort_by(|&a, &b| scores[a].total_cmp(&scores[b]).then(a.cmp(&b)));
    let mut starts: Vec<(Vec<(f64, f64)>, f64)> = Vec::new();
    for &idx in &order {
        if starts.len() >= opts.refine_starts.max(1) {
            break;
        }
        let s = scores[idx];
        if !starts.is_empty() && (!is_local_min(&tuples[idx], s) || starts.iter().any(|(_, v)| (v - s).abs() < 1e-12)) {
            continue;
        }
        let angles = tuples[idx].iter().map(|&(i, j)| (grid.theta(i), grid.phi(j))).collect();
        starts.push((angles, s));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_starts {
        let angles: Vec<(f64, f64)> = (0..k)
            .map(|_| {
                let z: f64 = rng.random_range(-1.0..=1.0);
                (z.acos(), rng.random_range(0.0..2.0 * PI))
            })
            .collect();
        let v = objective(&state, &angles)?;
        evals += 1;
        starts.push((angles, v));
    }

    let step0 = (PI / (size - 1) as f64, 2.0 * PI / size as f64);
    let mut best: Option<(Vec<(f64, f64)>, f64)> = None;
    for (angles, v) in starts {
        let (x, fx, n) = refine(&state, angles, v, step0, opts)?;
        evals += n;
        if best.as_ref().is_none_or(|(_, fb)| fx < *fb) {
            best = Some((x, fx));
        }
    }
    let (angles, value) = best.expect("at least one start");
    Ok(ConditionalEntropy { value, basis: MeasurementBasis::from_angles(&angles), evals })
}

/// Discord `I - J` across `part`, measuring the micro side.
pub fn discord(rho: &DensityMatrix, part: &Bipartition) -> Result<DiscordResult> {
    discord_with(rho, part, &DiscordOptions::default())
}

pub fn discord_with(rho: &DensityMatrix, part: &Bipartition, opts: &DiscordOptions) -> Result<DiscordResult> {
    part.check(rho.num_qubits())?;
    let k = part.micro().len();
    if !(1..=2).contains(&k) {
        return Err(Error::Unsupported(format!("discord is implemented for 1 or 2 measured qubits, got {k}")));
    }
    let s_all = von_neumann_entropy(rho)?;
    let mutual_information = mutual_information_given(rho, part, s_all)?;
    let s_macro = von_neumann_entropy(&partial_trace(rho, part.macro_qubits())?)?;
    let cond = minimize(rho, part, opts)?;

    let mut classical = (s_macro - cond.value).max(0.0);
    if classical > mutual_information && classical - mutual_information <= DISCORD_CLIP {
        classical = mutual_information;
    }
    let discord = mutual_information - classical;
    Ok(DiscordResult {
        discord,
        mutual_information,
        classical_correlation: classical,
        optimizer_basis: cond.basis,
        optimizer_evals: cond.evals,
    })
}
