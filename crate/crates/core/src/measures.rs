//! Von Neumann entropy, quantum Jensen-Shannon divergence, the PRI objective
//! and the degree-based Shannon entropy that approximates it.
//!
//! Everything is in nats. Eigenvalues at or below `1e-12` contribute zero
//! (`0 ln 0 = 0`), which stands in for the matrix logarithm on singular
//! Laplacians.

use serde::{Deserialize, Serialize};

use crate::density::{trace_normalize, DensityMatrix, DENSITY_TOLERANCE};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{entropy_of, sorted_eigenvalues};

/// Eigenvalues of a density matrix in nonincreasing order, tiny negatives
/// clamped to zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensitySpectrum {
    eigenvalues: Vec<f64>,
}

impl DensitySpectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn entropy(&self) -> f64 {
        entropy_of(&self.eigenvalues)
    }
}

pub fn spectrum(d: &DensityMatrix) -> Result<DensitySpectrum> {
    let mut eigenvalues = sorted_eigenvalues(d.matrix())?;
    // Unit trace and PSD put every eigenvalue in [0, 1]; clamp roundoff.
    for x in &mut eigenvalues {
        if *x < 0.0 {
            if *x < -DENSITY_TOLERANCE {
                return Err(Error::NotDensity(format!("eigenvalue {x:e}")));
            }
            *x = 0.0;
        }
        *x = x.min(1.0);
    }
    Ok(DensitySpectrum { eigenvalues })
}

/// `S(d) = -sum lambda_i ln lambda_i`.
pub fn von_neumann_entropy(d: &DensityMatrix) -> Result<f64> {
    Ok(spectrum(d)?.entropy())
}

/// Von Neumann entropy of the trace-normalized Laplacian of `g`.
pub fn graph_entropy(g: &Graph) -> Result<f64> {
    von_neumann_entropy(&trace_normalize(&g.laplacian())?)
}

/// `S((a + b) / 2) - S(a) / 2 - S(b) / 2`, clamped below at zero.
pub fn qjs_divergence(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    let mix = a.mixture(b)?;
    let d =
        von_neumann_entropy(&mix)? - 0.5 * von_neumann_entropy(a)? - 0.5 * von_neumann_entropy(b)?;
    Ok(d.max(0.0))
}

/// `(1 - beta) S(sigma) + 2 beta S((sigma + rho) / 2)`.
///
/// Equals `S(sigma) + beta * 2 * qjs(sigma, rho)` plus the constant
/// `beta * S(rho)`, which does not depend on `sigma`.
pub fn pri_objective(sigma: &DensityMatrix, rho: &DensityMatrix, beta: f64) -> Result<f64> {
    let s = von_neumann_entropy(sigma)?;
    if beta == 0.0 {
        if sigma.dim() != rho.dim() {
            return Err(Error::DimensionMismatch(sigma.dim(), rho.dim()));
        }
        return Ok(s);
    }
    let mix = sigma.mixture(rho)?;
    Ok((1.0 - beta) * s + 2.0 * beta * von_neumann_entropy(&mix)?)
}

/// Shannon entropy of a nonnegative weight vector after normalizing it to a
/// distribution.
pub fn distribution_entropy(weights: &[f64]) -> Result<f64> {
    let total: f64 = weights.iter().sum();
    if !(total > 0.0) {
        return Err(Error::EmptyGraph("degree sum is zero"));
    }
    Ok(-weights
        .iter()
        .filter(|&&d| d > 0.0)
        .map(|&d| {
            let p = d / total;
            p * p.ln()
        })
        .sum::<f64>())
}

/// `H(G) = -sum (d_i / d_G) ln(d_i / d_G)` on weighted degrees. Linear time.
pub fn shannon_degree_entropy(g: &Graph) -> Result<f64> {
    distribution_entropy(&g.degrees())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyGap {
    /// `H(G) - S(L~_G)`.
    pub gap: f64,
    /// `tr(W^2) / (delta * d_G)` with `delta` the smallest positive degree.
    pub upper_bound: f64,
}

impl EntropyGap {
    /// Gap relative to the von Neumann entropy, `H / S - 1`.
    pub fn relative(&self, von_neumann: f64) -> f64 {
        self.gap / von_neumann
    }
}

/// Difference between the degree entropy and the von Neumann entropy together
/// with its upper bound. In nats the `log2(e)` factor of the base-2 bound
/// cancels, leaving `tr(W^2) / (delta * d_G)`.
pub fn entropy_gap_bound(g: &Graph) -> Result<EntropyGap> {
    if g.is_empty() {
        return Err(Error::EmptyGraph("entropy gap needs at least one edge"));
    }
    let degrees = g.degrees();
    let h = distribution_entropy(&degrees)?;
    let s = graph_entropy(g)?;
    let degree_sum: f64 = degrees.iter().sum();
    let delta = degrees
        .iter()
        .copied()
        .filter(|&d| d > 0.0)
        .fold(f64::INFINITY, f64::min);
    Ok(EntropyGap {
        gap: h - s,
        upper_bound: g.trace_adjacency_squared() / (delta * degree_sum),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn density(g: &Graph) -> DensityMatrix {
        trace_normalize(&g.laplacian()).unwrap()
    }

    #[test]
    fn pure_state_entropy_not_negative() {
        let v = [0.3, -1.7, 0.9, 2.2, 0.1];
        let m = nalgebra::DMatrix::from_fn(5, 5, |i, j| v[i] * v[j]);
        let s = von_neumann_entropy(&trace_normalize(&m).unwrap()).unwrap();
        assert!(s >= 0.0 && s < 1e-12, "{s}");
    }

    fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                pairs.push((u, v));
            }
        }
        Graph::from_pairs(n, &pairs).unwrap()
    }

    fn star4() -> Graph {
        Graph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn spectra_of_small_graphs() {
        let edge = Graph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_close(
            spectrum(&density(&edge)).unwrap().eigenvalues(),
            &[1.0, 0.0],
            1e-12,
        );
        assert_close(
            spectrum(&density(&complete(3))).unwrap().eigenvalues(),
            &[0.5, 0.5, 0.0],
            1e-12,
        );
        assert_close(
            spectrum(&density(&star4())).unwrap().eigenvalues(),
            &[2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 0.0],
            1e-12,
        );
    }

    #[test]
    fn entropy_examples() {
        let edge = Graph::from_pairs(2, &[(0, 1)]).unwrap();
        assert!(graph_entropy(&edge).unwrap().abs() < 1e-12);
        assert!((graph_entropy(&complete(3)).unwrap() - LN_2).abs() < 1e-12);
        // {2/3, 1/6, 1/6, 0}
        let oracle = -(2.0 / 3.0 * (2.0f64 / 3.0).ln() + 2.0 / 6.0 * (1.0f64 / 6.0).ln());
        assert!((oracle - 0.8676).abs() < 1e-4);
        assert!((graph_entropy(&star4()).unwrap() - oracle).abs() < 1e-12);
    }

    #[test]
    fn qjs_examples() {
        let edges = Graph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        let a = density(&edges.subgraph(&[1.0, 0.0]).unwrap());
        let b = density(&edges.subgraph(&[0.0, 1.0]).unwrap());
        assert!((qjs_divergence(&a, &b).unwrap() - LN_2).abs() < 1e-12);
        assert!(qjs_divergence(&a, &a).unwrap().abs() < 1e-10);
        let c = density(&complete(3));
        assert!(matches!(
            qjs_divergence(&a, &c),
            Err(Error::DimensionMismatch(4, 3))
        ));
    }

    #[test]
    fn pri_objective_special_cases() {
        let g = star4();
        let rho = density(&complete(4));
        let sigma = density(&g);
        let s = von_neumann_entropy(&sigma).unwrap();
        assert_eq!(pri_objective(&sigma, &rho, 0.0).unwrap(), s);
        let s_rho = von_neumann_entropy(&rho).unwrap();
        for beta in [0.5, 1.0, 3.0] {
            let v = pri_objective(&rho, &rho, beta).unwrap();
            assert!((v - (1.0 + beta) * s_rho).abs() < 1e-12);
        }
    }

    #[test]
    fn degree_entropy_examples() {
        assert!((shannon_degree_entropy(&complete(5)).unwrap() - 5f64.ln()).abs() < 1e-12);
        let oracle = -(0.5 * 0.5f64.ln() + 3.0 * (1.0 / 6.0) * (1.0f64 / 6.0).ln());
        assert!((oracle - 1.2425).abs() < 1e-4);
        assert!((shannon_degree_entropy(&star4()).unwrap() - oracle).abs() < 1e-12);
        let edge = Graph::from_pairs(2, &[(0, 1)]).unwrap();
        assert!((shannon_degree_entropy(&edge).unwrap() - LN_2).abs() < 1e-12);
        let empty = Graph::from_pairs(3, &[]).unwrap();
        assert!(shannon_degree_entropy(&empty).is_err());
    }

    #[test]
    fn gap_examples() {
        let k3 = entropy_gap_bound(&complete(3)).unwrap();
        assert!((k3.gap - (3f64.ln() - LN_2)).abs() < 1e-12);
        // tr(W^2) = 6, delta = 2, d_G = 6
        assert!((k3.upper_bound - 0.5).abs() < 1e-12);
        assert!(k3.gap >= 0.0 && k3.gap <= k3.upper_bound);

        let edge = entropy_gap_bound(&Graph::from_pairs(2, &[(0, 1)]).unwrap()).unwrap();
        assert!((edge.gap - LN_2).abs() < 1e-12);
        assert!((edge.upper_bound - 1.0).abs() < 1e-12);

        assert!(entropy_gap_bound(&Graph::from_pairs(2, &[]).unwrap()).is_err());
    }
}
