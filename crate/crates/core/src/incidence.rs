//! Signed incidence matrix and the edge-selection algebra `L_s(w) = B diag(w) B^T`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-edge inclusion weights aligned with a graph's edge order.
///
/// Soft selections live in `[0, 1]^M`; hard selections in `{0, 1}^M`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSelection(Vec<f64>);

impl EdgeSelection {
    pub fn new(w: Vec<f64>) -> Result<Self> {
        for (index, &value) in w.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidSelection { index, value });
            }
        }
        Ok(Self(w))
    }

    pub fn ones(m: usize) -> Self {
        Self(vec![1.0; m])
    }

    pub fn zeros(m: usize) -> Self {
        Self(vec![0.0; m])
    }

    pub fn from_bools(mask: &[bool]) -> Self {
        Self(mask.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect())
    }

    pub fn from_indices(m: usize, kept: &[usize]) -> Self {
        let mut w = vec![0.0; m];
        for &i in kept {
            w[i] = 1.0;
        }
        Self(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn is_hard(&self) -> bool {
        self.0.iter().all(|&x| x == 0.0 || x == 1.0)
    }

    /// Number of nonzero entries, `||w||_0`.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0.0).count()
    }

    pub fn kept_indices(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0.0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// `N x M` incidence matrix with columns `+sqrt(mu)` at the head and
/// `-sqrt(mu)` at the tail. The head is always the smaller node index.
#[derive(Debug, Clone)]
pub struct IncidenceMatrix {
    values: DMatrix<f64>,
    heads: Vec<usize>,
    tails: Vec<usize>,
}

impl IncidenceMatrix {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.node_count();
        let m = g.edge_count();
        let mut values = DMatrix::zeros(n, m);
        let mut heads = Vec::with_capacity(m);
        let mut tails = Vec::with_capacity(m);
        for (j, e) in g.edges().iter().enumerate() {
            let (head, tail) = e.key();
            let s = e.weight.sqrt();
            values[(head, j)] = s;
            values[(tail, j)] = -s;
            heads.push(head);
            tails.push(tail);
        }
        Self {
            values,
            heads,
            tails,
        }
    }

    pub fn values(&self) -> &DMatrix<f64> {
        &self.values
    }

    pub fn node_count(&self) -> usize {
        self.values.nrows()
    }

    pub fn edge_count(&self) -> usize {
        self.values.ncols()
    }

    pub fn head(&self, m: usize) -> usize {
        self.heads[m]
    }

    pub fn tail(&self, m: usize) -> usize {
        self.tails[m]
    }

    /// `||b_m||^2`, which is `2 mu_m` up to rounding.
    pub fn column_norm_sq(&self, m: usize) -> f64 {
        let h = self.values[(self.heads[m], m)];
        let t = self.values[(self.tails[m], m)];
        h * h + t * t
    }

    /// `b_m^T X b_m` for a symmetric `X`.
    pub fn quadratic_form(&self, m: usize, x: &DMatrix<f64>) -> f64 {
        let (h, t) = (self.heads[m], self.tails[m]);
        let (bh, bt) = (self.values[(h, m)], self.values[(t, m)]);
        bh * bh * x[(h, h)] + bt * bt * x[(t, t)] + 2.0 * bh * bt * x[(h, t)]
    }

    /// `B B^T`.
    pub fn laplacian(&self) -> DMatrix<f64> {
        self.weighted_laplacian(&vec![1.0; self.edge_count()])
    }

    /// `B diag(w) B^T` accumulated column by column over the two nonzeros of
    /// each column. Entries with `w_m = 0` contribute nothing.
    pub fn weighted_laplacian(&self, w: &[f64]) -> DMatrix<f64> {
        let n = self.node_count();
        let mut l = DMatrix::zeros(n, n);
        for (m, &wm) in w.iter().enumerate() {
            if wm == 0.0 {
                continue;
            }
            let (h, t) = (self.heads[m], self.tails[m]);
            let (bh, bt) = (self.values[(h, m)], self.values[(t, m)]);
            l[(h, h)] += wm * bh * bh;
            l[(t, t)] += wm * bt * bt;
            let off = wm * bh * bt;
            l[(h, t)] += off;
            l[(t, h)] += off;
        }
        l
    }

    /// Diagonal of `B diag(w) B^T`, i.e. the soft node degrees.
    pub fn weighted_degrees(&self, w: &[f64]) -> Vec<f64> {
        let mut d = vec![0.0; self.node_count()];
        for (m, &wm) in w.iter().enumerate() {
            let (h, t) = (self.heads[m], self.tails[m]);
            d[h] += wm * self.values[(h, m)] * self.values[(h, m)];
            d[t] += wm * self.values[(t, m)] * self.values[(t, m)];
        }
        d
    }
}

pub fn incidence_matrix(g: &Graph) -> IncidenceMatrix {
    IncidenceMatrix::from_graph(g)
}

/// Laplacian of the subgraph selected by `w`.
pub fn subgraph_laplacian(b: &IncidenceMatrix, w: &EdgeSelection) -> Result<DMatrix<f64>> {
    if w.len() != b.edge_count() {
        return Err(Error::LengthMismatch {
            expected: b.edge_count(),
            actual: w.len(),
        });
    }
    Ok(b.weighted_laplacian(w.as_slice()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_columns() {
        let g = Graph::from_pairs(2, &[(1, 0)]).unwrap();
        let b = incidence_matrix(&g);
        assert_eq!(b.values().column(0).as_slice(), &[1.0, -1.0]);

        let g = Graph::from_triples(2, &[(0, 1, 4.0)]).unwrap();
        let b = incidence_matrix(&g);
        assert_eq!(b.values().column(0).as_slice(), &[2.0, -2.0]);
        assert_eq!(b.column_norm_sq(0), 8.0);
    }

    #[test]
    fn triangle_laplacian() {
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = incidence_matrix(&g);
        let expected =
            DMatrix::from_row_slice(3, 3, &[2.0, -1.0, -1.0, -1.0, 2.0, -1.0, -1.0, -1.0, 2.0]);
        assert_eq!(b.values() * b.values().transpose(), expected);
        assert_eq!(b.laplacian(), expected);
    }

    #[test]
    fn zero_selection_gives_zero_matrix() {
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let b = incidence_matrix(&g);
        let l = subgraph_laplacian(&b, &EdgeSelection::zeros(2)).unwrap();
        assert_eq!(l, DMatrix::zeros(3, 3));
        assert!(matches!(
            subgraph_laplacian(&b, &EdgeSelection::zeros(3)),
            Err(Error::LengthMismatch {
                expected: 2,
                actual: 3
            })
        ));
    }

    #[test]
    fn selection_validation() {
        assert!(EdgeSelection::new(vec![0.0, 0.5, 1.0]).is_ok());
        assert!(EdgeSelection::new(vec![1.5]).is_err());
        assert!(EdgeSelection::new(vec![-0.1]).is_err());
        let w = EdgeSelection::from_indices(4, &[1, 3]);
        assert!(w.is_hard());
        assert_eq!(w.support_size(), 2);
        assert_eq!(w.kept_indices(), vec![1, 3]);
    }

    #[test]
    fn quadratic_form_matches_dense_product() {
        let g = Graph::from_triples(4, &[(0, 3, 2.0), (1, 2, 0.5), (2, 3, 1.5)]).unwrap();
        let b = incidence_matrix(&g);
        let x = DMatrix::from_fn(4, 4, |i, j| (i + j) as f64 + if i == j { 3.0 } else { 0.0 });
        for m in 0..3 {
            let col = b.values().column(m);
            let dense = (col.transpose() * &x * col)[(0, 0)];
            assert!((b.quadratic_form(m, &x) - dense).abs() < 1e-12);
        }
    }
}
