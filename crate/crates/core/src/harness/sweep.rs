use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::{analytic_log_negativity, AnalyticCase};
use crate::channels::{make_channel, ChannelKind};
use crate::correlations::{discord_with, log_negativity, DiscordOptions};
use crate::error::{Error, Result};
use crate::states::{build_density, DensityMatrix, StateFamily};

use super::config::{Engine, Measure, SweepConfig};

/// Largest analytic/dense disagreement accepted by the `both` engine.
pub const ENGINE_AGREEMENT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub p: f64,
    pub log_negativity: Option<f64>,
    pub discord: Option<f64>,
    pub engine: Engine,
    pub wall_time_s: f64,
}

/// Log-negativity of one (family, channel) pair at any `p`, from the chosen engine.
pub struct LogNegativityEvaluator {
    family: StateFamily,
    channel: ChannelKind,
    engine: Engine,
    initial: Option<DensityMatrix>,
    case: Option<AnalyticCase>,
}

impl LogNegativityEvaluator {
    pub fn new(family: StateFamily, channel: ChannelKind, engine: Engine) -> Result<Self> {
        family.validate()?;
        let initial = match engine {
            Engine::Analytic => None,
            _ => Some(build_density(&family)?),
        };
        let case = match engine {
            Engine::Dense => None,
            _ => Some(AnalyticCase::new(family, channel)?),
        };
        Ok(Self { family, channel, engine, initial, case })
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn noisy_state(&self, p: f64) -> Result<DensityMatrix> {
        let rho = match &self.initial {
            Some(rho) => rho,
            None => return Err(Error::Config("the analytic engine does not build states".into())),
        };
        Ok(make_channel(self.channel, p)?.apply_all(rho))
    }

    pub fn at(&self, p: f64) -> Result<f64> {
        match self.engine {
            Engine::Analytic => analytic_log_negativity(self.case.as_ref().expect("analytic case"), p),
            Engine::Dense => log_negativity(&self.noisy_state(p)?, &self.family.bipartition()),
            Engine::Both => {
                let dense = log_negativity(&self.noisy_state(p)?, &self.family.bipartition())?;
                let analytic = analytic_log_negativity(self.case.as_ref().expect("analytic case"), p)?;
                if (dense - analytic).abs() > ENGINE_AGREEMENT_TOL {
                    return Err(Error::ValidationMismatch(format!(
                        "{} under {} at p = {p}: dense {dense} vs analytic {analytic}",
                        self.family.label(),
                        self.channel
                    )));
                }
                Ok(dense)
            }
        }
    }
}

/// One record per grid point, in ascending `p`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    cfg.validate()?;
    let eval = LogNegativityEvaluator::new(cfg.family, cfg.channel, cfg.engine)?;
    let want_ln = cfg.measures.contains(&Measure::LogNegativity);
    let want_discord = cfg.measures.contains(&Measure::Discord);
    let opts = DiscordOptions { seed: cfg.seed, ..DiscordOptions::default() };
    let part = cfg.family.bipartition();

    cfg.grid()
        .into_par_iter()
        .map(|p| {
            let start = Instant::now();
            let log_negativity = if want_ln { Some(eval.at(p)?) } else { None };
            let discord = if want_discord {
                let d = discord_with(&eval.noisy_state(p)?, &part, &opts)?.discord;
                Some(d.max(0.0))
            } else {
                None
            };
            Ok(SweepRecord { p, log_negativity, discord, engine: cfg.engine, wall_time_s: start.elapsed().as_secs_f64() })
        })
        .collect()
}
