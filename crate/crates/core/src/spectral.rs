use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Eigenvalues at or below this are treated as zero in entropies and logs.
pub const EIGEN_FLOOR: f64 = 1e-12;

/// Eigendecomposition of a symmetric matrix with the eigenvectors stored as
/// the *rows* of `vectors_t`, so that `vectors_t.column(i)` holds node `i`'s
/// coordinates in every eigenvector contiguously.
#[derive(Debug, Clone)]
pub(crate) struct SymEigen {
    pub values: Vec<f64>,
    pub vectors_t: DMatrix<f64>,
}

impl SymEigen {
    /// Decomposes each connected block of the sparsity pattern on its own
    /// and assembles the result. Zero rows become unit eigenvectors with
    /// eigenvalue 0. Besides being cheaper on sparse masks, this avoids
    /// NaN eigenvectors the dense solver produces on matrices with many
    /// zero rows.
    pub fn new(m: &DMatrix<f64>) -> Result<Self> {
        let n = m.nrows();
        let blocks = blocks(m);
        let mut values = Vec::with_capacity(n);
        let mut vectors_t = DMatrix::zeros(n, n);
        for nodes in blocks {
            let k = nodes.len();
            if k == 1 {
                let row = values.len();
                values.push(m[(nodes[0], nodes[0])]);
                vectors_t[(row, nodes[0])] = 1.0;
                continue;
            }
            let sub = DMatrix::from_fn(k, k, |i, j| m[(nodes[i], nodes[j])]);
            let eig = SymmetricEigen::try_new(sub, f64::EPSILON, 1000 * k)
                .ok_or(Error::EigenSolver(n))?;
            if eig.eigenvectors.iter().any(|x| !x.is_finite()) {
                return Err(Error::EigenSolver(n));
            }
            for (c, &lam) in eig.eigenvalues.iter().enumerate() {
                let row = values.len();
                values.push(lam);
                for (i, &node) in nodes.iter().enumerate() {
                    vectors_t[(row, node)] = eig.eigenvectors[(i, c)];
                }
            }
        }
        Ok(Self { values, vectors_t })
    }

    /// `sum_k c_k (U_ik - U_jk)^2`, the quadratic form of `U diag(c) U^T`
    /// against `e_i - e_j`.
    pub fn pair_form(&self, coeffs: &[f64], i: usize, j: usize) -> f64 {
        let ci = self.vectors_t.column(i);
        let cj = self.vectors_t.column(j);
        coeffs
            .iter()
            .zip(ci.iter().zip(cj.iter()))
            .map(|(c, (a, b))| c * (a - b) * (a - b))
            .sum()
    }

    /// `U diag(f(lambda)) U^T`.
    pub fn reconstruct(&self, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
        let n = self.values.len();
        let mut scaled = self.vectors_t.clone();
        for (k, &lam) in self.values.iter().enumerate() {
            let c = f(lam);
            for i in 0..n {
                scaled[(k, i)] *= c;
            }
        }
        self.vectors_t.transpose() * scaled
    }
}

/// Eigenvalues only, in nonincreasing order, block by block like
/// [`SymEigen::new`].
pub(crate) fn sorted_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    let mut values = Vec::with_capacity(m.nrows());
    for nodes in blocks(m) {
        if let [i] = nodes[..] {
            values.push(m[(i, i)]);
            continue;
        }
        let k = nodes.len();
        let sub = DMatrix::from_fn(k, k, |i, j| m[(nodes[i], nodes[j])]);
        values.extend(sub.symmetric_eigenvalues().iter());
    }
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::EigenSolver(m.nrows()));
    }
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Index sets of the connected components of the nonzero pattern.
fn blocks(m: &DMatrix<f64>) -> Vec<Vec<usize>> {
    let n = m.nrows();
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[start] = id;
        let mut members = vec![start];
        let mut head = 0;
        while head < members.len() {
            let i = members[head];
            head += 1;
            for j in 0..n {
                if label[j] == usize::MAX && (m[(i, j)] != 0.0 || m[(j, i)] != 0.0) {
                    label[j] = id;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// `-sum x ln x` over entries above [`EIGEN_FLOOR`].
pub(crate) fn entropy_of(values: &[f64]) -> f64 {
    -values
        .iter()
        .filter(|&&x| x > EIGEN_FLOOR)
        .map(|&x| x * x.ln())
        .sum::<f64>()
}
