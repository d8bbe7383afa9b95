//! Closed-form negative eigenvalues of the partially transposed noisy states,
//! used as fast oracles and cross-checked against dense simulation.

use std::fmt;

use serde::Serialize;

use crate::channels::{make_channel, ChannelKind};
use crate::correlations::log_negativity;
use crate::error::{Error, Result};
use crate::states::{build_density, FamilyKind, StateFamily, MAX_DENSE_QUBITS};

/// Noise symbols shared by every formula.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Symbols {
    /// `1 - p/2`
    pub alpha: f64,
    /// `p/2`
    pub beta: f64,
    /// `1 - p`
    pub gamma: f64,
}

impl Symbols {
    pub fn new(p: f64) -> Self {
        Self { alpha: 1.0 - p / 2.0, beta: p / 2.0, gamma: 1.0 - p }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    HcnmPhaseDamping,
    HcnmAmplitudeDamping,
    GhzPhaseDamping,
    GhzAmplitudeDamping,
    GhzDepolarizing,
    /// `H_C^N` is GHZ up to `X` on every macro qubit, which commutes with depolarizing noise.
    HcnnDepolarizing,
    GPhaseDamping,
    GAmplitudeDamping,
    HcnMinusOneDepolarizing,
}

impl FormulaId {
    pub fn name(&self) -> &'static str {
        match self {
            Self::HcnmPhaseDamping => "hcnm-lpdc",
            Self::HcnmAmplitudeDamping => "hcnm-ladc",
            Self::GhzPhaseDamping => "ghz-lpdc",
            Self::GhzAmplitudeDamping => "ghz-ladc",
            Self::GhzDepolarizing => "ghz-ldpc",
            Self::HcnnDepolarizing => "hcnn-ldpc",
            Self::GPhaseDamping => "g-lpdc",
            Self::GAmplitudeDamping => "g-ladc",
            Self::HcnMinusOneDepolarizing => "hcn1-ldpc",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A constant or symbol in a reference expression replaced after comparison
/// with dense simulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correction {
    pub symbol: &'static str,
    pub reference_form: &'static str,
    pub corrected_form: &'static str,
}

const HCN1_CORRECTIONS: [Correction; 3] = [
    Correction { symbol: "lambda_1", reference_form: "1/2 (a + c + (N-1)d - sqrt(...))", corrected_form: "1/4 (a + c + (N-1)d - sqrt(...))" },
    Correction { symbol: "a", reference_form: "beta alpha^N + alpha^2 beta^(N-1) / N", corrected_form: "beta alpha^N + alpha^2 beta^(N-1)" },
    Correction { symbol: "d~", reference_form: "beta gamma^2 alpha^(N-2) / N", corrected_form: "alpha gamma^2 beta^(N-2) / N" },
];

/// A (family, channel) pair together with the formula that covers it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyticCase {
    pub family: StateFamily,
    pub channel: ChannelKind,
    pub formula_id: FormulaId,
    pub corrections: Vec<Correction>,
}

fn no_formula(family: &StateFamily, channel: ChannelKind, why: &str) -> Error {
    Error::NoFormula(format!("{} under {channel}: {why}", family.label()))
}

impl AnalyticCase {
    pub fn new(family: StateFamily, channel: ChannelKind) -> Result<Self> {
        family.validate()?;
        use ChannelKind::*;
        use FormulaId::*;
        let (n, m, k) = (family.n, family.m, family.k);
        let formula_id = match (family.kind, channel) {
            (FamilyKind::HCNm, PhaseDamping) => HcnmPhaseDamping,
            (FamilyKind::HCNm, AmplitudeDamping) => HcnmAmplitudeDamping,
            (FamilyKind::HCNm, Depolarizing) if m == n => HcnnDepolarizing,
            (FamilyKind::HCNm, Depolarizing) if m + 1 == n && k == 1 => HcnMinusOneDepolarizing,
            (FamilyKind::HCNm, Depolarizing) => {
                return Err(no_formula(&family, channel, "only m = N, or m = N-1 with k = 1, has a closed form"))
            }
            (FamilyKind::Ghz, PhaseDamping) => GhzPhaseDamping,
            (FamilyKind::Ghz, AmplitudeDamping) => GhzAmplitudeDamping,
            (FamilyKind::Ghz, Depolarizing) => GhzDepolarizing,
            (FamilyKind::GState, PhaseDamping) if n % 2 == 0 && n >= 4 => GPhaseDamping,
            (FamilyKind::GState, PhaseDamping) => {
                return Err(no_formula(&family, channel, "the block form needs even N >= 4"))
            }
            (FamilyKind::GState, AmplitudeDamping) if n >= 4 => GAmplitudeDamping,
            (FamilyKind::GState, AmplitudeDamping) => {
                return Err(no_formula(&family, channel, "the block form needs N >= 4"))
            }
            _ => return Err(no_formula(&family, channel, "no closed form")),
        };
        let corrections = match formula_id {
            HcnMinusOneDepolarizing => HCN1_CORRECTIONS.to_vec(),
            _ => Vec::new(),
        };
        Ok(Self { family, channel, formula_id, corrections })
    }

    /// Candidate negative eigenvalues with multiplicities; only `min(0, lambda)`
    /// contributes to the negativity.
    pub fn eigenvalues(&self, p: f64) -> Result<Vec<(f64, usize)>> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("decoherence parameter {p} is outside [0, 1]")));
        }
        let Symbols { alpha, beta, gamma } = Symbols::new(p);
        let (n, m, k) = (self.family.n as i32, self.family.m as i32, self.family.k as i32);
        let nf = n as f64;
        let arrow = |a: f64, c: f64, off: f64| 0.25 * (a + c - ((a - c).powi(2) + 4.0 * off).sqrt());
        let ghz_depolarizing = || 0.5 * (alpha.powi(k) * beta.powi(n) + alpha.powi(n) * beta.powi(k) - gamma.powi(n + k));

        Ok(match self.formula_id {
            FormulaId::HcnmPhaseDamping => vec![(-0.5 * gamma.powi(k + m), 1)],
            FormulaId::HcnmAmplitudeDamping => {
                let s = p.powi(k) + p.powi(m);
                vec![(0.25 * (s - (s * s + 4.0 * gamma.powi(k + m)).sqrt()), 1)]
            }
            FormulaId::GhzPhaseDamping => vec![(-0.5 * gamma.powi(n + k), 1)],
            FormulaId::GhzAmplitudeDamping => {
                let a = p.powi(k) * gamma.powi(n);
                let d = p.powi(n) * gamma.powi(k);
                vec![(arrow(a, d, gamma.powi(n + k)), 1)]
            }
            FormulaId::GhzDepolarizing | FormulaId::HcnnDepolarizing => vec![(ghz_depolarizing(), 1)],
            FormulaId::GPhaseDamping => {
                let lo = gamma.powi(n - 1);
                let hi = gamma.powi(n + 1);
                let mult = self.family.n - 1;
                vec![
                    (lo * (gamma * gamma - 1.0) / (2.0 * nf), mult),
                    ((lo - hi) / (2.0 * nf), mult),
                    ((-(nf - 1.0) * lo - hi) / (2.0 * nf), 1),
                ]
            }
            FormulaId::GAmplitudeDamping => {
                let l1 = p * gamma.powi(n - 1) / nf;
                let l2 = gamma.powf((nf + 1.0) / 2.0) / nf;
                let l3 = (nf - 1.0) / nf * gamma * gamma * p.powi(n - 2);
                let l4 = gamma * gamma * p.powi(n - 2) / nf;
                let diag = l3 + (nf - 1.0) * l4;
                let first = 0.25 * (nf * l1 + diag - (4.0 * nf * nf * l2 * l2 + (diag - nf * l1).powi(2)).sqrt());

                let a1 = p.powi(n - 1) * gamma;
                let b1 = 2.0 / nf * gamma.powf((nf - 1.0) / 2.0) * p;
                let c1 = 2.0 / nf * p * p * gamma.powi(n - 2);
                let d1 = p * p * gamma.powi(n - 2) / nf;
                let diag = c1 + (2.0 * nf - 4.0) * d1;
                let second =
                    0.25 * (a1 + diag - (2.0 * nf * (nf - 1.0) * b1 * b1 + (diag - a1).powi(2)).sqrt());
                vec![(first, 1), (second, 1)]
            }
            FormulaId::HcnMinusOneDepolarizing => {
                let a = beta * alpha.powi(n) + alpha * alpha * beta.powi(n - 1);
                let b = gamma.powi(n) * alpha / nf.sqrt();
                let c = alpha * alpha * beta.powi(n - 1)
                    + (beta * alpha.powi(n) + (nf - 1.0) * beta.powi(3) * alpha.powi(n - 2)) / nf;
                let d = beta * gamma * gamma * alpha.powi(n - 2) / nf;

                let at = alpha * beta.powi(n) + beta * beta * alpha.powi(n - 1);
                let bt = beta * gamma.powi(n) / nf.sqrt();
                let ct = beta * beta * alpha.powi(n - 1)
                    + (alpha * beta.powi(n) + (nf - 1.0) * alpha.powi(3) * beta.powi(n - 2)) / nf;
                let dt = alpha * gamma * gamma * beta.powi(n - 2) / nf;

                vec![
                    (arrow(a, c + (nf - 1.0) * d, nf * b * b), 1),
                    (arrow(at, ct + (nf - 1.0) * dt, nf * bt * bt), 1),
                ]
            }
        })
    }
}

/// `log2(2 sum |min(0, lambda)| + 1)` from the closed-form eigenvalues.
pub fn analytic_log_negativity(case: &AnalyticCase, p: f64) -> Result<f64> {
    let neg: f64 = case.eigenvalues(p)?.iter().map(|&(l, mult)| -l.min(0.0) * mult as f64).sum();
    Ok((2.0 * neg + 1.0).log2())
}

/// Dense log-negativity of `family` after `channel` acts on every qubit.
pub fn dense_log_negativity(family: &StateFamily, channel: ChannelKind, p: f64) -> Result<f64> {
    let rho = make_channel(channel, p)?.apply_all(&build_density(family)?);
    log_negativity(&rho, &family.bipartition())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationPoint {
    pub p: f64,
    pub analytic: f64,
    pub dense: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub case: AnalyticCase,
    pub points: Vec<ValidationPoint>,
    pub max_deviation: f64,
}

impl ValidationReport {
    pub fn within(&self, tol: f64) -> bool {
        self.max_deviation <= tol
    }
}

/// Compares the closed form with dense simulation on every grid point.
pub fn validate_against_dense(case: &AnalyticCase, p_grid: &[f64]) -> Result<ValidationReport> {
    let total = case.family.num_qubits();
    if total > MAX_DENSE_QUBITS {
        return Err(Error::Resource(format!("{total} qubits exceeds the dense limit of {MAX_DENSE_QUBITS}")));
    }
    let points = p_grid
        .iter()
        .map(|&p| {
            Ok(ValidationPoint {
                p,
                analytic: analytic_log_negativity(case, p)?,
                dense: dense_log_negativity(&case.family, case.channel, p)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_deviation = points.iter().map(|pt| (pt.analytic - pt.dense).abs()).fold(0.0, f64::max);
    Ok(ValidationReport { case: case.clone(), points, max_deviation })
}
