//! Replicated trials comparing empirical `Pr{rho <= r_n}` with
//! `exp(-e^{-c})`.
//!
//! The configured `k` is the order used by the prediction, and the events
//! concern `delta >= k+1` and `kappa >= k+1`: a trial computes both radii at
//! `k + 1`. Trial `i` draws its points from stream `i` of the experiment
//! seed, and each trial's radii are compared against every `r_n` on the
//! c-grid, so empirical rows are monotone in `c` exactly.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::asymptotics::{limit_probability, predicted_radius, PredictionInput};
use crate::error::{domain, Result};
use crate::geometry::ConvexRegion;
use crate::rgg::radii;
use crate::sampling::{sample_poisson_stream, sample_uniform_stream, Process};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub region: ConvexRegion,
    pub n: usize,
    pub k: usize,
    pub c_grid: Vec<f64>,
    pub replications: usize,
    pub seed: u64,
    pub process: Process,
}

impl ExperimentConfig {
    /// Uniform process, c-grid `{-1, 0, 1, 2}`, 1000 replications.
    pub fn new(region: ConvexRegion, n: usize, k: usize, seed: u64) -> Self {
        Self {
            region,
            n,
            k,
            c_grid: vec![-1.0, 0.0, 1.0, 2.0],
            replications: 1000,
            seed,
            process: Process::Uniform,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.replications < 1 {
            return domain("replications must be >= 1");
        }
        if self.n < self.k + 2 {
            return domain(format!(
                "n = {} is too small for k = {} (need n >= k + 2)",
                self.n, self.k
            ));
        }
        if (self.region.area() - 1.0).abs() > 1e-9 {
            return domain(format!(
                "region {} has area {}; the prediction needs unit area (use normalize)",
                self.region.label(),
                self.region.area()
            ));
        }
        if let Some(c) = self.c_grid.iter().find(|c| !c.is_finite()) {
            return domain(format!("c-grid value {c} is not finite"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub trial_index: usize,
    pub rho_delta: f64,
    pub rho_kappa: f64,
    pub equal: bool,
}

/// One trial: sample, then both radii at order `k + 1`.
pub fn run_trial(config: &ExperimentConfig, trial_index: usize) -> Result<TrialResult> {
    let stream = trial_index as u64;
    let points = match config.process {
        Process::Uniform => sample_uniform_stream(&config.region, config.n, config.seed, stream),
        Process::Poisson => {
            sample_poisson_stream(&config.region, config.n as f64, config.seed, stream)?
        }
    };
    let r = radii(&points, config.k + 1)?;
    Ok(TrialResult {
        trial_index,
        rho_delta: r.rho_delta,
        rho_kappa: r.rho_kappa,
        equal: r.equal,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub c: f64,
    pub r_n: f64,
    pub p_hat_delta: f64,
    pub ci_lo_delta: f64,
    pub ci_hi_delta: f64,
    pub p_hat_kappa: f64,
    pub ci_lo_kappa: f64,
    pub ci_hi_kappa: f64,
    pub predicted: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: Vec<SummaryRow>,
    pub equal_fraction: f64,
    pub replications: usize,
    pub n: usize,
    pub k: usize,
    pub region_id: String,
    pub seed: u64,
    /// Per-trial radii in trial order.
    pub trials: Vec<TrialResult>,
}

/// Runs all trials in parallel and aggregates them in trial order.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Summary> {
    config.validate()?;
    let l = config.region.perimeter();
    let thresholds = config
        .c_grid
        .iter()
        .map(|&c| predicted_radius(&PredictionInput::new(config.n as f64, config.k, c, l)))
        .collect::<Result<Vec<f64>>>()?;
    let trials = (0..config.replications)
        .into_par_iter()
        .map(|i| run_trial(config, i))
        .collect::<Result<Vec<_>>>()?;
    let reps = trials.len();
    let rows = config
        .c_grid
        .iter()
        .zip(&thresholds)
        .map(|(&c, &r_n)| {
            let hits_d = trials.iter().filter(|t| t.rho_delta <= r_n).count();
            let hits_k = trials.iter().filter(|t| t.rho_kappa <= r_n).count();
            let (ci_lo_delta, ci_hi_delta) = wilson_interval(hits_d, reps, 0.95)?;
            let (ci_lo_kappa, ci_hi_kappa) = wilson_interval(hits_k, reps, 0.95)?;
            Ok(SummaryRow {
                c,
                r_n,
                p_hat_delta: hits_d as f64 / reps as f64,
                ci_lo_delta,
                ci_hi_delta,
                p_hat_kappa: hits_k as f64 / reps as f64,
                ci_lo_kappa,
                ci_hi_kappa,
                predicted: limit_probability(c),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let equal = trials.iter().filter(|t| t.equal).count();
    Ok(Summary {
        rows,
        equal_fraction: equal as f64 / reps as f64,
        replications: reps,
        n: config.n,
        k: config.k,
        region_id: config.region.label().to_string(),
        seed: config.seed,
        trials,
    })
}

/// Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: usize, trials: usize, confidence: f64) -> Result<(f64, f64)> {
    if trials < 1 || successes > trials {
        return domain(format!(
            "need 0 <= successes <= trials and trials >= 1, got {successes}/{trials}"
        ));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return domain(format!("confidence must be in (0, 1), got {confidence}"));
    }
    let z = Normal::standard().inverse_cdf(0.5 + confidence / 2.0);
    let nf = trials as f64;
    let p = successes as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let center = (p + z2 / (2.0 * nf)) / denom;
    let half = z / denom * (p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)).sqrt();
    let lo = if successes == 0 {
        0.0
    } else {
        (center - half).max(0.0)
    };
    let hi = if successes == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    Ok((lo, hi))
}

pub const CSV_HEADER: &str = "c,r_n,p_hat_delta,ci_lo_delta,ci_hi_delta,p_hat_kappa,ci_lo_kappa,ci_hi_kappa,predicted,equal_fraction,reps,n,k,region_id,seed";

/// One line per c-grid row. Floats use Rust's shortest round-trip format,
/// so equal summaries give identical bytes.
pub fn write_summary_csv<W: Write>(summary: &Summary, mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in &summary.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.c,
            r.r_n,
            r.p_hat_delta,
            r.ci_lo_delta,
            r.ci_hi_delta,
            r.p_hat_kappa,
            r.ci_lo_kappa,
            r.ci_hi_kappa,
            r.predicted,
            summary.equal_fraction,
            summary.replications,
            summary.n,
            summary.k,
            csv_field(&summary.region_id),
            summary.seed
        )?;
    }
    Ok(())
}

/// Per-trial radii: `trial,rho_delta,rho_kappa,equal`.
pub fn write_trials_csv<W: Write>(trials: &[TrialResult], mut out: W) -> Result<()> {
    writeln!(out, "trial,rho_delta,rho_kappa,equal")?;
    for t in trials {
        writeln!(
            out,
            "{},{},{},{}",
            t.trial_index, t.rho_delta, t.rho_kappa, t.equal
        )?;
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
