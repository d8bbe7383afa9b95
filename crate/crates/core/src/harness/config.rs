use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::channels::ChannelKind;
use crate::error::{Error, Result};
use crate::states::{StateFamily, MAX_DENSE_QUBITS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    #[serde(alias = "ln")]
    LogNegativity,
    Discord,
}

impl Measure {
    pub fn parse_list(s: &str) -> Result<Vec<Measure>> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let m = match item.to_ascii_lowercase().as_str() {
                "ln" | "log_negativity" | "logneg" => Measure::LogNegativity,
                "discord" | "qd" => Measure::Discord,
                other => return Err(Error::Config(format!("unknown measure {other:?}"))),
            };
            if !out.contains(&m) {
                out.push(m);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    #[default]
    Dense,
    Analytic,
    /// Dense values, checked against the closed form at every point.
    Both,
}

impl Engine {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dense" => Ok(Self::Dense),
            "analytic" => Ok(Self::Analytic),
            "both" => Ok(Self::Both),
            other => Err(Error::Config(format!("unknown engine {other:?}"))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Self::Dense => "dense",
            Self::Analytic => "analytic",
            Self::Both => "both",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A sweep over an evenly spaced `p` grid. Every field has a default, so a
/// JSON config may set any subset of them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub family: StateFamily,
    pub channel: ChannelKind,
    pub p_start: f64,
    pub p_end: f64,
    pub p_steps: usize,
    pub measures: Vec<Measure>,
    pub engine: Engine,
    /// Seed for the random refinement starts of the discord optimizer.
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            family: StateFamily::hcnm(6, 1, 1),
            channel: ChannelKind::PhaseDamping,
            p_start: 0.0,
            p_end: 1.0,
            p_steps: 101,
            measures: vec![Measure::LogNegativity],
            engine: Engine::Dense,
            seed: crate::correlations::DiscordOptions::default().seed,
        }
    }
}

impl SweepConfig {
    pub fn from_json_str(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        self.family.validate()?;
        let in_range = |x: f64| (0.0..=1.0).contains(&x);
        if !in_range(self.p_start) || !in_range(self.p_end) {
            return Err(Error::Config(format!("p range [{}, {}] is outside [0, 1]", self.p_start, self.p_end)));
        }
        if self.p_start >= self.p_end {
            return Err(Error::Config(format!("p_start {} must be below p_end {}", self.p_start, self.p_end)));
        }
        if self.p_steps < 2 {
            return Err(Error::Config(format!("p_steps must be at least 2, got {}", self.p_steps)));
        }
        if self.measures.is_empty() {
            return Err(Error::Config("no measures requested".into()));
        }
        if self.measures.contains(&Measure::Discord) && self.engine != Engine::Dense {
            return Err(Error::Config("discord is only available from the dense engine".into()));
        }
        if self.engine != Engine::Analytic && self.family.num_qubits() > MAX_DENSE_QUBITS {
            return Err(Error::Resource(format!(
                "{} qubits exceeds the dense limit of {MAX_DENSE_QUBITS}",
                self.family.num_qubits()
            )));
        }
        Ok(())
    }

    /// `p_steps` points from `p_start` to `p_end`, both included.
    pub fn grid(&self) -> Vec<f64> {
        p_grid(self.p_start, self.p_end, self.p_steps)
    }
}

pub fn p_grid(start: f64, end: f64, steps: usize) -> Vec<f64> {
    let last = steps.saturating_sub(1).max(1);
    (0..steps)
        .map(|i| if i == last { end } else { start + (end - start) * i as f64 / last as f64 })
        .collect()
}
