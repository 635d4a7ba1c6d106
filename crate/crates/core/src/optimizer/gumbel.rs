use rand::Rng;

/// Uniform draws are clamped into `[U_CLAMP, 1 - U_CLAMP]` so the Gumbel
/// transform never sees `ln 0`.
pub const U_CLAMP: f64 = 1e-12;

/// One relaxed draw from a two-category distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GumbelSample {
    /// Tempered softmax of the perturbed logits; sums to one.
    pub soft: [f64; 2],
    /// One-hot argmax of the perturbed logits. Ties go to category 0.
    pub hard: [f64; 2],
}

impl GumbelSample {
    /// Forward value of category 1 (edge kept).
    pub fn keep(&self, hard: bool) -> f64 {
        if hard {
            self.hard[1]
        } else {
            self.soft[1]
        }
    }

    /// Derivative of `soft[1]` with respect to `(theta_0, theta_1)`.
    ///
    /// With straight-through sampling the hard value is used forward and this
    /// soft derivative backward.
    pub fn keep_derivative(&self, tau: f64) -> [f64; 2] {
        let d = self.soft[0] * self.soft[1] / tau;
        [-d, d]
    }
}

pub fn gumbel_noise<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u: f64 = rng.gen::<f64>().clamp(U_CLAMP, 1.0 - U_CLAMP);
    -(-u.ln()).ln()
}

/// Softmax over `(logits + gumbel) / tau` for a row of unnormalized
/// log-probabilities.
pub fn gumbel_softmax_sample<R: Rng + ?Sized>(
    theta_row: [f64; 2],
    tau: f64,
    rng: &mut R,
) -> GumbelSample {
    let g0 = gumbel_noise(rng);
    let g1 = gumbel_noise(rng);
    relaxed([theta_row[0] + g0, theta_row[1] + g1], tau)
}

pub(crate) fn relaxed(perturbed: [f64; 2], tau: f64) -> GumbelSample {
    let y0 = perturbed[0] / tau;
    let y1 = perturbed[1] / tau;
    let top = y0.max(y1);
    let e0 = (y0 - top).exp();
    let e1 = (y1 - top).exp();
    let z = e0 + e1;
    let hard = if perturbed[1] > perturbed[0] {
        [0.0, 1.0]
    } else {
        [1.0, 0.0]
    };
    GumbelSample {
        soft: [e0 / z, e1 / z],
        hard,
    }
}

/// Probability of keeping an edge under logits `theta_row`, `softmax(theta)_1`.
pub fn keep_probability(theta_row: [f64; 2]) -> f64 {
    1.0 / (1.0 + (theta_row[0] - theta_row[1]).exp())
}
