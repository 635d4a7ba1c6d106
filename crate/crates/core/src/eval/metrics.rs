use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::SymEigen;

/// Below this `x^T sigma x` the sparsified graph is treated as flat along `x`.
pub const NULL_QUADRATIC: f64 = 1e-12;

/// Unit eigenvector of the second-smallest eigenvalue of a Laplacian, with
/// the first entry of magnitude above `1e-12` made positive.
pub fn fiedler_vector(laplacian: &DMatrix<f64>) -> Result<DVector<f64>> {
    let n = laplacian.nrows();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "Fiedler vector needs at least two nodes".into(),
        ));
    }
    let eig = SymEigen::new(laplacian)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.values[a].total_cmp(&eig.values[b]));
    let k = order[1];
    if eig.values[k] <= 1e-10 {
        return Err(Error::Disconnected(format!(
            "algebraic connectivity {:.3e} is zero",
            eig.values[k]
        )));
    }
    let mut x = DVector::from_iterator(n, eig.vectors_t.row(k).iter().copied());
    x /= x.norm();
    if let Some(first) = x.iter().find(|v| v.abs() > 1e-12) {
        if *first < 0.0 {
            x = -x;
        }
    }
    Ok(x)
}

/// Geodesic distance between `rho` and `sigma` seen along `x`:
/// `arccosh(1 + ||(rho - sigma) x||^2 ||x||^2 / (2 (x^T rho x)(x^T sigma x)))`.
/// Returns `+inf` when `x^T sigma x <= 1e-12`.
pub fn spectral_distance(
    rho: &DMatrix<f64>,
    sigma: &DMatrix<f64>,
    x: &DVector<f64>,
) -> Result<f64> {
    let n = rho.nrows();
    if sigma.nrows() != n || x.len() != n {
        return Err(Error::DimensionMismatch(n, sigma.nrows().max(x.len())));
    }
    let rx = rho * x;
    let sx = sigma * x;
    let xr = x.dot(&rx);
    let xs = x.dot(&sx);
    if xr <= NULL_QUADRATIC {
        return Err(Error::InvalidParameter(format!(
            "x^T rho x = {xr:.3e} must be positive"
        )));
    }
    if xs <= NULL_QUADRATIC {
        return Ok(f64::INFINITY);
    }
    let diff = (rx - sx).norm_squared();
    let arg = 1.0 + diff * x.norm_squared() / (2.0 * xr * xs);
    Ok(arg.acosh())
}

/// Freeman degree centralization on unweighted degrees,
/// `sum_i (d_max - d_i) / (N^2 - 3N + 2)`.
pub fn centralization(g: &Graph) -> Result<f64> {
    let n = g.node_count();
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "centralization needs at least 3 nodes, got {n}"
        )));
    }
    let d = g.unweighted_degrees();
    let max = *d.iter().max().expect("n >= 3");
    let total: usize = d.iter().map(|&x| max - x).sum();
    Ok(total as f64 / ((n - 1) * (n - 2)) as f64)
}
