//! Objective with connectivity barrier and its gradients with respect to the
//! edge-selection vector.
//!
//! For `sigma~ = B diag(w) B^T / t` with `t = tr(B diag(w) B^T)` and a
//! spectral term `F(sigma~)` with matrix gradient `G`, the chain rule through
//! the trace normalization gives
//!
//! ```text
//! dF/dw_m = (b_m^T G b_m - ||b_m||^2 tr(G sigma~)) / t
//! ```
//!
//! and `tr(G sigma~) = sum_j w_j b_j^T G b_j / t`, so only the per-edge
//! quadratic forms are needed. The mixture `(sigma~ + rho~) / 2` moves at half
//! the rate of `sigma~`.

use nalgebra::DMatrix;

use crate::density::{trace_normalize, DensityMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::{EdgeSelection, IncidenceMatrix};
use crate::spectral::{entropy_of, SymEigen, EIGEN_FLOOR};

use super::PriConfig;

/// Degrees below this are clamped inside the log barrier.
pub const BARRIER_FLOOR: f64 = 1e-12;

/// Derivative of `-x ln x`, with null eigenvalues handled as described on
/// [`PriProblem::evaluate`].
fn entropy_slope(x: f64, null_step: f64) -> f64 {
    if x <= EIGEN_FLOOR {
        -(null_step.ln() + 1.0)
    } else {
        -(x.ln() + 1.0)
    }
}

/// Precomputed pieces shared by every evaluation on one input graph.
#[derive(Debug, Clone)]
pub struct PriProblem {
    weights: Vec<f64>,
    min_weight: f64,
    incidence: IncidenceMatrix,
    rho: DensityMatrix,
}

/// Value and gradient with respect to `w` of the full training objective.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub value: f64,
    pub gradient: Vec<f64>,
}

impl PriProblem {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::EmptyGraph("cannot sparsify a graph without edges"));
        }
        let incidence = IncidenceMatrix::from_graph(g);
        let rho = trace_normalize(&incidence.laplacian())?;
        let weights: Vec<f64> = g.edges().iter().map(|e| e.weight).collect();
        Ok(Self {
            min_weight: weights.iter().copied().fold(f64::INFINITY, f64::min),
            weights,
            incidence,
            rho,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn incidence(&self) -> &IncidenceMatrix {
        &self.incidence
    }

    pub fn rho(&self) -> &DensityMatrix {
        &self.rho
    }

    fn check_len(&self, w: &[f64]) -> Result<()> {
        if w.len() != self.edge_count() {
            return Err(Error::LengthMismatch {
                expected: self.edge_count(),
                actual: w.len(),
            });
        }
        Ok(())
    }

    /// Objective value only.
    pub fn objective(&self, w: &[f64], cfg: &PriConfig) -> Result<f64> {
        Ok(self.evaluate(w, cfg)?.value)
    }

    /// `pri_objective(sigma~_w, rho~, beta) - alpha sum_i ln max(deg_i(w), 1e-12)`,
    /// with the entropy term swapped for the degree entropy when
    /// `cfg.use_degree_entropy_approx` is set. Returns the gradient as well.
    ///
    /// Both `-x ln x` at `x = 0` and `ln d` at `d = 0` have unbounded
    /// derivatives, which hard masks hit all the time. There the gradient
    /// uses the slope of the smallest step a mask can take: a null
    /// eigenvalue is differentiated as if it sat at `mu_min / t`, and an
    /// isolated endpoint of edge `m` contributes the secant
    /// `ln(mu_m / 1e-12) / mu_m` of the clamped barrier. Away from those
    /// points the gradient is exact.
    pub fn evaluate(&self, w: &[f64], cfg: &PriConfig) -> Result<Evaluation> {
        self.check_len(w)?;
        let b = &self.incidence;
        let m = self.edge_count();
        let sigma = b.weighted_laplacian(w);
        let t = sigma.trace();
        if !(t > 0.0) {
            return Err(Error::EmptyGraph("edge selection is all zero"));
        }
        let sigma_n = sigma / t;
        let null_step = self.min_weight / t;
        let beta = cfg.beta;
        let entropy_coef = 1.0 - beta;

        let mut value = 0.0;
        // Per-edge b_m^T G b_m of the spectral terms, before normalization.
        let mut forms = vec![0.0; m];
        // Gradient terms that do not pass through the trace normalization.
        let mut direct = vec![0.0; m];
        let degrees = b.weighted_degrees(w);

        if entropy_coef != 0.0 {
            if cfg.use_degree_entropy_approx {
                let total: f64 = degrees.iter().sum();
                let h = -degrees
                    .iter()
                    .filter(|&&d| d > 0.0)
                    .map(|&d| (d / total) * (d / total).ln())
                    .sum::<f64>();
                value += entropy_coef * h;
                let slope: Vec<f64> = degrees
                    .iter()
                    .map(|&d| -((d / total).max(EIGEN_FLOOR).ln() + h) / total)
                    .collect();
                for (k, g) in direct.iter_mut().enumerate() {
                    let mu = self.weights[k];
                    *g += entropy_coef * mu * (slope[b.head(k)] + slope[b.tail(k)]);
                }
            } else {
                let eig = SymEigen::new(&sigma_n)?;
                value += entropy_coef * entropy_of(&eig.values);
                let slopes: Vec<f64> = eig
                    .values
                    .iter()
                    .map(|&x| entropy_slope(x, null_step))
                    .collect();
                for (k, f) in forms.iter_mut().enumerate() {
                    *f += entropy_coef
                        * self.weights[k]
                        * eig.pair_form(&slopes, b.head(k), b.tail(k));
                }
            }
        }

        if beta != 0.0 {
            let mix = (&sigma_n + self.rho.matrix()) * 0.5;
            let eig = SymEigen::new(&mix)?;
            value += 2.0 * beta * entropy_of(&eig.values);
            let slopes: Vec<f64> = eig
                .values
                .iter()
                .map(|&x| entropy_slope(x, null_step))
                .collect();
            // 2 beta * (1/2) from d mix / d sigma~.
            for (k, f) in forms.iter_mut().enumerate() {
                *f += beta * self.weights[k] * eig.pair_form(&slopes, b.head(k), b.tail(k));
            }
        }

        let coupling: f64 = w.iter().zip(&forms).map(|(wj, f)| wj * f).sum::<f64>() / t;
        let mut gradient: Vec<f64> = (0..m)
            .map(|k| (forms[k] - b.column_norm_sq(k) * coupling) / t + direct[k])
            .collect();

        if cfg.alpha != 0.0 {
            value -= cfg.alpha
                * degrees
                    .iter()
                    .map(|&d| d.max(BARRIER_FLOOR).ln())
                    .sum::<f64>();
            for (k, g) in gradient.iter_mut().enumerate() {
                let mu = self.weights[k];
                let slope = |i: usize| {
                    let d = degrees[i];
                    if d > BARRIER_FLOOR {
                        1.0 / d
                    } else {
                        (mu / BARRIER_FLOOR).ln() / mu
                    }
                };
                *g -= cfg.alpha * mu * (slope(b.head(k)) + slope(b.tail(k)));
            }
        }

        Ok(Evaluation { value, gradient })
    }
}

/// Value of the training objective for a soft or hard selection.
pub fn objective_with_barrier(
    g: &Graph,
    b: &IncidenceMatrix,
    w: &EdgeSelection,
    cfg: &PriConfig,
) -> Result<f64> {
    if b.edge_count() != g.edge_count() || b.node_count() != g.node_count() {
        return Err(Error::LengthMismatch {
            expected: g.edge_count(),
            actual: b.edge_count(),
        });
    }
    PriProblem::new(g)?.objective(w.as_slice(), cfg)
}

/// Terms of the closed-form gradient at an interior selection.
#[derive(Debug, Clone)]
pub struct GradientTerms {
    /// `g = -diag(B^T [(1 - beta) ln sigma~ + beta ln sigma_bar] B)`.
    pub g: Vec<f64>,
    /// `w / sum(w)`.
    pub normalized: Vec<f64>,
    /// `||b_m||^2`.
    pub column_norms: Vec<f64>,
    /// `tr(B diag(w) B^T)`.
    pub trace: f64,
    /// `sum(w)`.
    pub weight_sum: f64,
}

impl GradientTerms {
    /// Exact gradient of the trace-normalized objective:
    /// `(g - ||b||^2 (w . g) / t) / t`. Orthogonal to `w` because the
    /// objective is invariant to rescaling `w`.
    pub fn gradient(&self) -> Vec<f64> {
        let t = self.trace;
        let wg: f64 = self
            .normalized
            .iter()
            .zip(&self.g)
            .map(|(w, g)| w * g)
            .sum::<f64>()
            * self.weight_sum;
        self.g
            .iter()
            .zip(&self.column_norms)
            .map(|(g, n)| (g - n * wg / t) / t)
            .collect()
    }

    /// `U g` with `U_ii = 1` and `U_ij = -w~_j / (1 - w~_i)`.
    ///
    /// Entry `i` is `(g_i - w~ . g) / (1 - w~_i)`: the rate of change along
    /// the path that raises `w~_i` and shrinks the other normalized weights in
    /// proportion. For graphs with a common edge weight `mu` it equals
    /// `2 mu sum(w)` times the derivative of the objective along
    /// `(e_i - w~) / (1 - w~_i)` in `w`.
    pub fn coupled(&self) -> Vec<f64> {
        let wg: f64 = self
            .normalized
            .iter()
            .zip(&self.g)
            .map(|(w, g)| w * g)
            .sum();
        self.g
            .iter()
            .zip(&self.normalized)
            .map(|(g, wn)| (g - wg) / (1.0 - wn))
            .collect()
    }
}

/// Matrix logarithm restricted to the eigenvectors with eigenvalue above the
/// floor; the null space maps to zero.
pub(crate) fn log_on_support(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let eig = SymEigen::new(m)?;
    Ok(eig.reconstruct(|x| if x > EIGEN_FLOOR { x.ln() } else { 0.0 }))
}

pub fn gradient_terms(b: &IncidenceMatrix, w: &EdgeSelection, beta: f64) -> Result<GradientTerms> {
    if w.len() != b.edge_count() {
        return Err(Error::LengthMismatch {
            expected: b.edge_count(),
            actual: w.len(),
        });
    }
    for (index, &value) in w.as_slice().iter().enumerate() {
        if !(value > 0.0 && value < 1.0) {
            return Err(Error::BoundarySelection { index, value });
        }
    }
    let sigma = b.weighted_laplacian(w.as_slice());
    let trace = sigma.trace();
    let sigma_n = sigma / trace;
    let rho = trace_normalize(&b.laplacian())?;
    let mut log_term = log_on_support(&sigma_n)? * (1.0 - beta);
    if beta != 0.0 {
        let mix = (&sigma_n + rho.matrix()) * 0.5;
        log_term += log_on_support(&mix)? * beta;
    }
    let m = b.edge_count();
    let weight_sum: f64 = w.as_slice().iter().sum();
    Ok(GradientTerms {
        g: (0..m).map(|k| -b.quadratic_form(k, &log_term)).collect(),
        normalized: w.as_slice().iter().map(|x| x / weight_sum).collect(),
        column_norms: (0..m).map(|k| b.column_norm_sq(k)).collect(),
        trace,
        weight_sum,
    })
}

/// Closed-form gradient of `(1 - beta) S(sigma~_w) + 2 beta S(sigma_bar_w)`
/// at a strictly interior `w`.
pub fn analytical_gradient(b: &IncidenceMatrix, w: &EdgeSelection, beta: f64) -> Result<Vec<f64>> {
    Ok(gradient_terms(b, w, beta)?.gradient())
}
