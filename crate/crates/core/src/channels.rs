//! Single-qubit noise channels in Kraus form and their local application.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg::{qubit_mask, Matrix, C64, ZERO};
use crate::states::DensityMatrix;

pub type Kraus = [[C64; 2]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChannelKind {
    #[serde(rename = "lpdc", alias = "phase_damping")]
    PhaseDamping,
    #[serde(rename = "ladc", alias = "amplitude_damping")]
    AmplitudeDamping,
    #[serde(rename = "ldpc", alias = "depolarizing")]
    Depolarizing,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 3] =
        [ChannelKind::PhaseDamping, ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing];

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lpdc" | "pd" | "phase_damping" | "phasedamping" => Ok(Self::PhaseDamping),
            "ladc" | "ad" | "amplitude_damping" | "amplitudedamping" => Ok(Self::AmplitudeDamping),
            "ldpc" | "dp" | "depolarizing" => Ok(Self::Depolarizing),
            other => Err(Error::Config(format!("unknown channel {other:?}"))),
        }
    }

    /// Short tag: `lpdc`, `ladc` or `ldpc`.
    pub fn tag(&self) -> &'static str {
        match self {
            Self::PhaseDamping => "lpdc",
            Self::AmplitudeDamping => "ladc",
            Self::Depolarizing => "ldpc",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::PhaseDamping => "LPDC",
            Self::AmplitudeDamping => "LADC",
            Self::Depolarizing => "LDPC",
        })
    }
}

/// Parameter of the three-Pauli form `(1-p')rho + p'/3 (X rho X + Y rho Y + Z rho Z)`
/// that matches the white-noise parameter `p`.
pub fn depolarizing_p_prime(p: f64) -> f64 {
    0.75 * p
}

/// A single-qubit CPTP map with decoherence parameter `p` in `[0, 1]`.
#[derive(Clone, Debug)]
pub struct KrausChannel {
    kind: ChannelKind,
    p: f64,
    kraus_ops: Vec<Kraus>,
    // superop[2x+y][2a+b] = sum_i K_i[x][a] conj(K_i[y][b])
    superop: [[C64; 4]; 4],
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn make_channel(kind: ChannelKind, p: f64) -> Result<KrausChannel> {
    KrausChannel::new(kind, p)
}

impl KrausChannel {
    pub fn new(kind: ChannelKind, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(domain(format!("decoherence parameter {p} is outside [0, 1]")));
        }
        let kraus_ops = match kind {
            ChannelKind::PhaseDamping => {
                let s = (1.0 - p).sqrt();
                let q = p.sqrt();
                vec![[[c(s), ZERO], [ZERO, c(s)]], [[c(q), ZERO], [ZERO, ZERO]], [[ZERO, ZERO], [ZERO, c(q)]]]
            }
            ChannelKind::AmplitudeDamping => {
                vec![[[c(1.0), ZERO], [ZERO, c((1.0 - p).sqrt())]], [[ZERO, c(p.sqrt())], [ZERO, ZERO]]]
            }
            ChannelKind::Depolarizing => {
                let s = (1.0 - depolarizing_p_prime(p)).sqrt();
                let q = (p / 4.0).sqrt();
                let i = C64::new(0.0, q);
                vec![
                    [[c(s), ZERO], [ZERO, c(s)]],
                    [[ZERO, c(q)], [c(q), ZERO]],
                    [[ZERO, -i], [i, ZERO]],
                    [[c(q), ZERO], [ZERO, c(-q)]],
                ]
            }
        };
        let mut superop = [[ZERO; 4]; 4];
        for k in &kraus_ops {
            for x in 0..2 {
                for y in 0..2 {
                    for a in 0..2 {
                        for b in 0..2 {
                            superop[2 * x + y][2 * a + b] += k[x][a] * k[y][b].conj();
                        }
                    }
                }
            }
        }
        Ok(Self { kind, p, kraus_ops, superop })
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn kraus_ops(&self) -> &[Kraus] {
        &self.kraus_ops
    }

    /// `max |sum_i K_i^dagger K_i - I|`.
    pub fn completeness_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for col in 0..2 {
                let s: C64 = self.kraus_ops.iter().map(|k| k[0][r].conj() * k[0][col] + k[1][r].conj() * k[1][col]).sum();
                let target = if r == col { 1.0 } else { 0.0 };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }

    /// The channel acting on a single-qubit matrix.
    pub fn apply_qubit(&self, m: &Matrix) -> Matrix {
        assert_eq!(m.dim(), 2);
        let mut out = m.clone();
        self.apply_in_place(&mut out, 1, 0);
        out
    }

    /// `rho -> sum_i (I ⊗ K_i ⊗ I) rho (I ⊗ K_i ⊗ I)^dagger` on one qubit.
    pub fn apply_local(&self, rho: &DensityMatrix, qubit: usize) -> Result<DensityMatrix> {
        let n = rho.num_qubits();
        if qubit >= n {
            return Err(domain(format!("qubit {qubit} out of range for {n} qubits")));
        }
        let mut m = rho.matrix().clone();
        self.apply_in_place(&mut m, n, qubit);
        Ok(DensityMatrix::from_matrix_unchecked(n, m))
    }

    /// Applies the channel to every qubit in turn.
    pub fn apply_all(&self, rho: &DensityMatrix) -> DensityMatrix {
        let n = rho.num_qubits();
        let mut m = rho.matrix().clone();
        for q in 0..n {
            self.apply_in_place(&mut m, n, q);
        }
        DensityMatrix::from_matrix_unchecked(n, m)
    }

    fn apply_in_place(&self, m: &mut Matrix, n: usize, qubit: usize) {
        let dim = m.dim();
        let bit = qubit_mask(n, qubit);
        let s = &self.superop;
        let data = m.data_mut();
        for r0 in (0..dim).filter(|r| r & bit == 0) {
            let r1 = r0 | bit;
            for c0 in (0..dim).filter(|c| c & bit == 0) {
                let c1 = c0 | bit;
                let idx = [r0 * dim + c0, r0 * dim + c1, r1 * dim + c0, r1 * dim + c1];
                let v = [data[idx[0]], data[idx[1]], data[idx[2]], data[idx[3]]];
                for (row, &i) in s.iter().zip(&idx) {
                    data[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
                }
            }
        }
    }
}
