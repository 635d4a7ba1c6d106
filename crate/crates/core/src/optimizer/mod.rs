//! Stochastic training of the edge-selection vector.
//!
//! Each edge carries two logits `theta_m = (drop, keep)`. An iteration draws
//! `samples` Gumbel-softmax masks, averages the barrier objective over them
//! and takes one Adam step on `theta`. With hard sampling the forward pass
//! sees the one-hot mask and the backward pass the relaxed one.

mod adam;
pub mod gumbel;
mod harden;
pub mod objective;

use std::time::{Duration, Instant};

use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::EdgeSelection;
use crate::seed::{self, stream};

pub use gumbel::{gumbel_softmax_sample, keep_probability, GumbelSample};
pub use harden::{harden, HardenMode};
pub use objective::{
    analytical_gradient, gradient_terms, objective_with_barrier, Evaluation, GradientTerms,
    PriProblem, BARRIER_FLOOR,
};

use adam::Adam;

/// How the gradient with respect to `theta` is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GradientMode {
    /// Average over Gumbel-softmax draws, differentiated through the
    /// relaxation.
    Sampled,
    /// No noise: `w = softmax(theta)_keep` and the exact gradient of the
    /// objective at that point.
    Deterministic,
}

/// How the returned hard mask is extracted from the trained logits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FinalMask {
    /// One more hard Gumbel-softmax draw.
    Sample,
    /// Deterministic rule applied to the keep probabilities.
    Harden(HardenMode),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PriConfig {
    pub beta: f64,
    /// Weight of the log-degree barrier.
    pub alpha: f64,
    pub temperature: f64,
    /// When set, the temperature moves linearly from `temperature` to this
    /// value over the run.
    pub temperature_final: Option<f64>,
    pub step_size: f64,
    pub samples: usize,
    pub max_iterations: usize,
    pub seed: u64,
    pub hard_sampling: bool,
    pub use_degree_entropy_approx: bool,
    pub gradient_mode: GradientMode,
    pub final_mask: FinalMask,
}

impl Default for PriConfig {
    fn default() -> Self {
        Self {
            beta: 1.0,
            alpha: 0.005,
            temperature: 1.0,
            temperature_final: None,
            step_size: 0.05,
            samples: 5,
            max_iterations: 500,
            seed: 0,
            hard_sampling: true,
            use_degree_entropy_approx: false,
            gradient_mode: GradientMode::Sampled,
            final_mask: FinalMask::Sample,
        }
    }
}

impl PriConfig {
    pub fn with_beta(beta: f64) -> Self {
        Self {
            beta,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if !(self.beta >= 0.0 && self.beta.is_finite()) {
            return bad(format!("beta must be finite and >= 0, got {}", self.beta));
        }
        if !(self.alpha >= 0.0 && self.alpha.is_finite()) {
            return bad(format!("alpha must be finite and >= 0, got {}", self.alpha));
        }
        if !(self.temperature > 0.0 && self.temperature.is_finite()) {
            return bad(format!("temperature must be > 0, got {}", self.temperature));
        }
        if let Some(t) = self.temperature_final {
            if !(t > 0.0 && t.is_finite()) {
                return bad(format!("final temperature must be > 0, got {t}"));
            }
        }
        if !(self.step_size > 0.0 && self.step_size.is_finite()) {
            return bad(format!("step size must be > 0, got {}", self.step_size));
        }
        if self.samples == 0 {
            return bad("samples must be at least 1".into());
        }
        if let FinalMask::Harden(HardenMode::Threshold(t)) = self.final_mask {
            if !t.is_finite() {
                return bad(format!("threshold must be finite, got {t}"));
            }
        }
        Ok(())
    }

    fn temperature_at(&self, iteration: usize) -> f64 {
        match self.temperature_final {
            Some(end) if self.max_iterations > 1 => {
                let frac = iteration as f64 / (self.max_iterations - 1) as f64;
                self.temperature + (end - self.temperature) * frac
            }
            _ => self.temperature,
        }
    }
}

/// Trainable state of one run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OptimizerState {
    /// `M x 2` logits, rows `(drop, keep)`.
    pub theta: Vec<[f64; 2]>,
    pub iteration: usize,
    pub objective_trace: Vec<f64>,
}

impl OptimizerState {
    fn init(edge_count: usize, rng: &mut impl rand::Rng) -> Self {
        let theta = (0..edge_count)
            .map(|_| [StandardNormal.sample(rng), StandardNormal.sample(rng)])
            .collect();
        Self {
            theta,
            iteration: 0,
            objective_trace: Vec::new(),
        }
    }

    pub fn keep_probabilities(&self) -> Vec<f64> {
        self.theta
            .iter()
            .map(|&row| keep_probability(row))
            .collect()
    }

    fn dump(&self) -> String {
        let bad = self
            .theta
            .iter()
            .flatten()
            .filter(|x| !x.is_finite())
            .count();
        let last = self.objective_trace.last().copied();
        format!(
            "{bad} non-finite logits of {}, last finite objective {last:?}",
            2 * self.theta.len()
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SparsifyReport {
    pub selection: EdgeSelection,
    /// Keep probabilities `softmax(theta)_keep` after training.
    pub soft_selection: Vec<f64>,
    /// Mean objective per iteration.
    pub objective_trace: Vec<f64>,
    pub retained_edge_count: usize,
    /// Sampled masks that were all-zero and therefore left out of the average.
    pub skipped_samples: usize,
    pub warnings: Vec<String>,
    pub config: PriConfig,
    /// Excluded from serialized output so reports are reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

/// Learn a sparse subgraph of `g` by minimizing the relevant-information
/// objective.
pub fn sparsify_pri(g: &Graph, cfg: &PriConfig) -> Result<SparsifyReport> {
    cfg.validate()?;
    let start = Instant::now();
    let problem = PriProblem::new(g)?;
    let m = problem.edge_count();
    let mut rng = seed::split_rng(cfg.seed, stream::PRI, 0);
    let mut state = OptimizerState::init(m, &mut rng);
    let mut adam = Adam::new(2 * m, cfg.step_size);
    let mut skipped = 0usize;
    let mut warnings = Vec::new();
    let mut params = vec![0.0; 2 * m];
    let mut grad_theta = vec![0.0; 2 * m];

    for iteration in 0..cfg.max_iterations {
        state.iteration = iteration;
        let tau = cfg.temperature_at(iteration);
        grad_theta.iter_mut().for_each(|x| *x = 0.0);
        let mut total = 0.0;
        let mut used = 0usize;

        match cfg.gradient_mode {
            GradientMode::Sampled => {
                let mut draws: Vec<GumbelSample> = Vec::with_capacity(m);
                let mut w = vec![0.0; m];
                for _ in 0..cfg.samples {
                    draws.clear();
                    draws.extend(
                        state
                            .theta
                            .iter()
                            .map(|&row| gumbel_softmax_sample(row, tau, &mut rng)),
                    );
                    for (wk, d) in w.iter_mut().zip(&draws) {
                        *wk = d.keep(cfg.hard_sampling);
                    }
                    let eval = match problem.evaluate(&w, cfg) {
                        Ok(e) => e,
                        Err(Error::EmptyGraph(_)) => {
                            skipped += 1;
                            continue;
                        }
                        Err(e) => return Err(e),
                    };
                    total += eval.value;
                    used += 1;
                    for (k, d) in draws.iter().enumerate() {
                        let dk = d.keep_derivative(tau);
                        grad_theta[2 * k] += eval.gradient[k] * dk[0];
                        grad_theta[2 * k + 1] += eval.gradient[k] * dk[1];
                    }
                }
            }
            GradientMode::Deterministic => {
                let p = state.keep_probabilities();
                let eval = problem.evaluate(&p, cfg)?;
                total = eval.value;
                used = 1;
                for (k, &pk) in p.iter().enumerate() {
                    let d = pk * (1.0 - pk);
                    grad_theta[2 * k] -= eval.gradient[k] * d;
                    grad_theta[2 * k + 1] += eval.gradient[k] * d;
                }
            }
        }

        if used == 0 {
            continue;
        }
        let scale = 1.0 / used as f64;
        let value = total * scale;
        grad_theta.iter_mut().for_each(|x| *x *= scale);
        if !value.is_finite() || grad_theta.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite {
                iteration,
                detail: format!("objective {value}; {}", state.dump()),
            });
        }
        state.objective_trace.push(value);

        for (k, row) in state.theta.iter().enumerate() {
            params[2 * k] = row[0];
            params[2 * k + 1] = row[1];
        }
        adam.step(&mut params, &grad_theta);
        for (k, row) in state.theta.iter_mut().enumerate() {
            *row = [params[2 * k], params[2 * k + 1]];
        }
        if state.theta.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite {
                iteration,
                detail: state.dump(),
            });
        }
    }

    if skipped > 0 {
        warnings.push(format!("{skipped} sampled masks were empty and skipped"));
    }
    let soft_selection = state.keep_probabilities();
    let selection = match cfg.final_mask {
        FinalMask::Sample => {
            let tau = cfg.temperature_at(cfg.max_iterations.saturating_sub(1));
            let mask: Vec<bool> = state
                .theta
                .iter()
                .map(|&row| gumbel_softmax_sample(row, tau, &mut rng).hard[1] == 1.0)
                .collect();
            EdgeSelection::from_bools(&mask)
        }
        FinalMask::Harden(mode) => harden(&EdgeSelection::new(soft_selection.clone())?, mode)?,
    };
    let retained_edge_count = selection.support_size();
    if retained_edge_count == 0 {
        warnings.push("final mask keeps no edges".into());
    }

    Ok(SparsifyReport {
        selection,
        soft_selection,
        objective_trace: state.objective_trace,
        retained_edge_count,
        skipped_samples: skipped,
        warnings,
        config: cfg.clone(),
        wall_time: start.elapsed(),
    })
}
