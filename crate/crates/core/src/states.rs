//! State construction for the micro : macro superposition families.
//!
//! Tensor ordering is fixed crate-wide: the `k` microscopic qubits are the
//! leading (most significant) tensor factors, and qubit 0 is the most
//! significant bit of a computational-basis index. `|10>` is index 2.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg::{Matrix, C64, ZERO};

/// Largest register this crate will build a density matrix for.
pub const MAX_DENSE_QUBITS: usize = 14;

const NORM_TOL: f64 = 1e-12;
const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Wraps an amplitude vector, checking length `2^num_qubits` and unit norm.
    pub fn new(num_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        if num_qubits == 0 {
            return Err(domain("a state needs at least one qubit"));
        }
        if amplitudes.len() != 1usize << num_qubits {
            return Err(domain(format!(
                "{num_qubits} qubits need {} amplitudes, got {}",
                1usize << num_qubits,
                amplitudes.len()
            )));
        }
        let norm2: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::InvariantViolation(format!("squared norm {norm2} is not 1")));
        }
        Ok(Self { num_qubits, amplitudes })
    }

    /// Normalizes `amplitudes` before wrapping them.
    pub fn normalized(num_qubits: usize, mut amplitudes: Vec<C64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(domain("cannot normalize a zero vector"));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::new(num_qubits, amplitudes)
    }

    /// Computational basis state `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(domain(format!("basis index {index} out of range for {num_qubits} qubits")));
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = C64::new(1.0, 0.0);
        Self::new(num_qubits, amps)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// `self ⊗ other`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let amps = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        PureState { num_qubits: self.num_qubits + other.num_qubits, amplitudes: amps }
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        to_density(self)
    }
}

/// A validated density matrix together with its qubit count.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    matrix: Matrix,
}

impl DensityMatrix {
    /// Checks Hermiticity, unit trace and positivity before wrapping.
    pub fn new(num_qubits: usize, matrix: Matrix) -> Result<Self> {
        if num_qubits == 0 || matrix.dim() != 1usize << num_qubits {
            return Err(domain(format!(
                "matrix of dimension {} does not describe {num_qubits} qubits",
                matrix.dim()
            )));
        }
        let rho = Self { num_qubits, matrix };
        rho.check_invariants()?;
        Ok(rho)
    }

    /// Skips validation; only for maps already known to preserve the invariants.
    pub(crate) fn from_matrix_unchecked(num_qubits: usize, matrix: Matrix) -> Self {
        debug_assert_eq!(matrix.dim(), 1usize << num_qubits);
        Self { num_qubits, matrix }
    }

    pub fn maximally_mixed(num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 || num_qubits > MAX_DENSE_QUBITS {
            return Err(domain(format!("unsupported qubit count {num_qubits}")));
        }
        let dim = 1usize << num_qubits;
        Ok(Self::from_matrix_unchecked(num_qubits, Matrix::identity(dim).scale(1.0 / dim as f64)))
    }

    pub fn check_invariants(&self) -> Result<()> {
        let defect = self.matrix.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::InvariantViolation(format!("not Hermitian (defect {defect:e})")));
        }
        let tr = self.matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvariantViolation(format!("trace is {tr}, expected 1")));
        }
        let min = self.matrix.hermitian_eigenvalues()?.first().copied().unwrap_or(0.0);
        if min < -PSD_TOL {
            return Err(Error::InvariantViolation(format!("negative eigenvalue {min:e}")));
        }
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.matrix[(row, col)]
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    /// `tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
        self.matrix.data().iter().map(|z| z.norm_sqr()).sum()
    }

    /// `rho ⊗ sigma`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &DensityMatrix) -> DensityMatrix {
        Self::from_matrix_unchecked(self.num_qubits + other.num_qubits, self.matrix.kron(&other.matrix))
    }

    /// Convex combination `sum_i w_i rho_i`; weights must be non-negative and sum to 1.
    pub fn mixture(parts: &[(f64, DensityMatrix)]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| domain("empty mixture"))?;
        let n = first.1.num_qubits;
        let total: f64 = parts.iter().map(|(w, _)| w).sum();
        if parts.iter().any(|(w, r)| *w < 0.0 || r.num_qubits != n) || (total - 1.0).abs() > 1e-12 {
            return Err(domain("mixture weights must be non-negative, sum to 1, and share a register"));
        }
        let mut acc = Matrix::zeros(first.1.dim());
        for (w, r) in parts {
            for (a, b) in acc.data_mut().iter_mut().zip(r.matrix.data()) {
                *a += b * *w;
            }
        }
        Ok(Self::from_matrix_unchecked(n, acc))
    }

    /// `U rho U^dagger` for a full-register unitary `u`.
    pub fn conjugate_by(&self, u: &Matrix) -> Result<Self> {
        if u.dim() != self.dim() {
            return Err(domain("unitary dimension does not match the state"));
        }
        let out = u.matmul(&self.matrix).matmul(&u.adjoint());
        Ok(Self::from_matrix_unchecked(self.num_qubits, out))
    }
}

/// `|psi><psi|`.
pub fn to_density(psi: &PureState) -> Result<DensityMatrix> {
    if psi.num_qubits > MAX_DENSE_QUBITS {
        return Err(Error::Resource(format!(
            "{} qubits exceed the dense limit of {MAX_DENSE_QUBITS}",
            psi.num_qubits
        )));
    }
    Ok(DensityMatrix::from_matrix_unchecked(psi.num_qubits, Matrix::outer(&psi.amplitudes)))
}

/// Dicke state `|W_n^m>`: the equal superposition of all `n`-qubit basis
/// states with exactly `m` ones.
pub fn dicke(n: usize, m: usize) -> Result<PureState> {
    if n == 0 {
        return Err(domain("Dicke state needs at least one qubit"));
    }
    if m > n {
        return Err(domain(format!("excitation count {m} exceeds qubit count {n}")));
    }
    if n > 30 {
        return Err(Error::Resource(format!("{n} qubits is too many for a state vector")));
    }
    let dim = 1usize << n;
    let count = (0..dim).filter(|x| x.count_ones() as usize == m).count();
    let amp = C64::new(1.0 / (count as f64).sqrt(), 0.0);
    let amps = (0..dim).map(|x| if x.count_ones() as usize == m { amp } else { ZERO }).collect();
    PureState::new(n, amps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// `(|0^k>|W_N^m> + |1^k>|0^N>)/sqrt 2`
    #[serde(alias = "hcnm")]
    HCNm,
    /// `(|0^k 0^N> + |1^k 1^N>)/sqrt 2`
    #[serde(rename = "ghz")]
    Ghz,
    /// `(|0>|W_N> + |1> X^{⊗N}|W_N>)/sqrt 2`, one micro qubit.
    #[serde(rename = "g")]
    GState,
    /// `|W_{N+k}^m>` split into its first `k` and last `N` qubits.
    Dicke,
    /// `|0^k>|0^N>`.
    #[serde(rename = "product")]
    BasisProduct,
}

impl FamilyKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hcnm" | "hc" => Ok(Self::HCNm),
            "ghz" => Ok(Self::Ghz),
            "g" | "gstate" => Ok(Self::GState),
            "dicke" => Ok(Self::Dicke),
            "product" => Ok(Self::BasisProduct),
            other => Err(Error::Config(format!("unknown family {other:?}"))),
        }
    }
}

/// One of the named states, with its macroscopic size `n`, excitation count
/// `m` and microscopic size `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StateFamily {
    pub kind: FamilyKind,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(default)]
    pub m: usize,
    #[serde(default = "one")]
    pub k: usize,
}

fn one() -> usize {
    1
}

impl StateFamily {
    pub fn hcnm(n: usize, m: usize, k: usize) -> Self {
        Self { kind: FamilyKind::HCNm, n, m, k }
    }

    pub fn ghz(n: usize, k: usize) -> Self {
        Self { kind: FamilyKind::Ghz, n, m: 0, k }
    }

    pub fn g_state(n: usize) -> Self {
        Self { kind: FamilyKind::GState, n, m: 1, k: 1 }
    }

    pub fn dicke(n: usize, m: usize, k: usize) -> Self {
        Self { kind: FamilyKind::Dicke, n, m, k }
    }

    pub fn basis_product(n: usize, k: usize) -> Self {
        Self { kind: FamilyKind::BasisProduct, n, m: 0, k }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(domain("the macroscopic part needs at least one qubit"));
        }
        if self.k == 0 {
            return Err(domain("the microscopic part needs at least one qubit"));
        }
        match self.kind {
            FamilyKind::HCNm if self.m == 0 || self.m > self.n => {
                Err(domain(format!("H_C needs 1 <= m <= N, got m={} N={}", self.m, self.n)))
            }
            FamilyKind::GState if self.n < 2 => Err(domain("the G state needs N >= 2")),
            FamilyKind::GState if self.k != 1 => Err(domain("the G state has exactly one micro qubit")),
            FamilyKind::Dicke if self.m > self.n + self.k => {
                Err(domain(format!("Dicke excitation count {} exceeds N+k", self.m)))
            }
            _ => Ok(()),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n + self.k
    }

    pub fn bipartition(&self) -> Bipartition {
        Bipartition::split(self.k, self.num_qubits()).expect("validated family has k < N+k")
    }

    /// `m = N`: the H_C state coincides with GHZ up to local unitaries.
    pub fn is_ghz_boundary(&self) -> bool {
        self.kind == FamilyKind::HCNm && self.m == self.n
    }

    pub fn label(&self) -> String {
        match self.kind {
            FamilyKind::HCNm if self.m == self.n => "H_C^N".into(),
            FamilyKind::HCNm => format!("H_C^{}", self.m),
            FamilyKind::Ghz => "GHZ".into(),
            FamilyKind::GState => "G".into(),
            FamilyKind::Dicke => format!("W^{}", self.m),
            FamilyKind::BasisProduct => "product".into(),
        }
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (N={}, m={}, k={})", self.label(), self.n, self.m, self.k)
    }
}

/// Builds the `(N+k)`-qubit pure state for a family.
pub fn build_pure(family: &StateFamily) -> Result<PureState> {
    family.validate()?;
    let (n, k, m) = (family.n, family.k, family.m);
    let total = n + k;
    if total > 30 {
        return Err(Error::Resource(format!("{total} qubits is too many for a state vector")));
    }
    let dim = 1usize << total;
    let macro_dim = 1usize << n;
    let micro_ones = (1usize << k) - 1;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![ZERO; dim];
    match family.kind {
        FamilyKind::HCNm => {
            let w = dicke(n, m)?;
            for (x, a) in w.amplitudes().iter().enumerate() {
                amps[x] += a * h;
            }
            amps[micro_ones * macro_dim] += C64::new(h, 0.0);
        }
        FamilyKind::Ghz => {
            amps[0] = C64::new(h, 0.0);
            amps[dim - 1] = C64::new(h, 0.0);
        }
        FamilyKind::GState => {
            let w = dicke(n, 1)?;
            let flip = macro_dim - 1;
            for (x, a) in w.amplitudes().iter().enumerate() {
                amps[x] += a * h;
                amps[macro_dim + (x ^ flip)] += a * h;
            }
        }
        FamilyKind::Dicke => return dicke(total, m),
        FamilyKind::BasisProduct => amps[0] = C64::new(1.0, 0.0),
    }
    PureState::normalized(total, amps)
}

/// Builds `|psi><psi|` for a family.
pub fn build_density(family: &StateFamily) -> Result<DensityMatrix> {
    if family.num_qubits() > MAX_DENSE_QUBITS {
        return Err(Error::Resource(format!(
            "{} qubits exceed the dense limit of {MAX_DENSE_QUBITS}",
            family.num_qubits()
        )));
    }
    to_density(&build_pure(family)?)
}

/// A split of the register into a microscopic and a macroscopic part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    micro: Vec<usize>,
    macro_: Vec<usize>,
}

impl Bipartition {
    /// Both index lists keep the order given; together they must cover
    /// `0..micro.len() + macro_qubits.len()` exactly once.
    pub fn new(micro: Vec<usize>, macro_qubits: Vec<usize>) -> Result<Self> {
        let n = micro.len() + macro_qubits.len();
        if micro.is_empty() || macro_qubits.is_empty() {
            return Err(domain("both sides of a bipartition must be non-empty"));
        }
        let mut seen = vec![false; n];
        for &q in micro.iter().chain(&macro_qubits) {
            if q >= n || std::mem::replace(&mut seen[q], true) {
                return Err(domain(format!("qubit {q} is out of range or listed twice")));
            }
        }
        Ok(Self { micro, macro_: macro_qubits })
    }

    /// Leading `k` qubits micro, the rest macro.
    pub fn split(k: usize, num_qubits: usize) -> Result<Self> {
        if k == 0 || k >= num_qubits {
            return Err(domain(format!("cannot split {num_qubits} qubits with {k} on the micro side")));
        }
        Self::new((0..k).collect(), (k..num_qubits).collect())
    }

    pub fn micro(&self) -> &[usize] {
        &self.micro
    }

    pub fn macro_qubits(&self) -> &[usize] {
        &self.macro_
    }

    pub fn num_qubits(&self) -> usize {
        self.micro.len() + self.macro_.len()
    }

    /// Same split with the two sides exchanged.
    pub fn swapped(&self) -> Self {
        Self { micro: self.macro_.clone(), macro_: self.micro.clone() }
    }

    pub(crate) fn check(&self, num_qubits: usize) -> Result<()> {
        if self.num_qubits() != num_qubits {
            return Err(domain(format!(
                "bipartition covers {} qubits but the state has {num_qubits}",
                self.num_qubits()
            )));
        }
        Ok(())
    }
}
