//! Comparison sparsifiers. All return hard masks over the input edge order
//! and never reweight the kept edges.

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::EdgeSelection;
use crate::seed::{self, stream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SparsifierMethod {
    Random,
    LocalDegree,
    LocalSimilarity,
    EffectiveResistance,
}

impl SparsifierMethod {
    pub const ALL: [SparsifierMethod; 4] = [
        SparsifierMethod::Random,
        SparsifierMethod::LocalDegree,
        SparsifierMethod::LocalSimilarity,
        SparsifierMethod::EffectiveResistance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SparsifierMethod::Random => "random",
            SparsifierMethod::LocalDegree => "local_degree",
            SparsifierMethod::LocalSimilarity => "local_similarity",
            SparsifierMethod::EffectiveResistance => "effective_resistance",
        }
    }
}

/// A baseline run. `target` is the kept-edge ratio, except for
/// [`SparsifierMethod::LocalDegree`] where it is the degree exponent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparsifierSpec {
    pub method: SparsifierMethod,
    pub target: f64,
    pub seed: u64,
}

impl SparsifierSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match self.method {
            SparsifierMethod::LocalDegree => (0.0..=1.0).contains(&self.target),
            _ => self.target > 0.0 && self.target <= 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "{} target {} out of range",
                self.method.name(),
                self.target
            )))
        }
    }

    pub fn run(&self, g: &Graph) -> Result<EdgeSelection> {
        self.validate()?;
        match self.method {
            SparsifierMethod::Random => random_sparsifier(g, self.target, self.seed),
            SparsifierMethod::LocalDegree => local_degree(g, self.target),
            SparsifierMethod::LocalSimilarity => local_similarity(g, self.target),
            SparsifierMethod::EffectiveResistance => {
                effective_resistance_sparsifier(g, self.target, self.seed)
            }
        }
    }
}

fn check_ratio(ratio: f64) -> Result<()> {
    if ratio > 0.0 && ratio <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "ratio {ratio} outside (0, 1]"
        )))
    }
}

/// `ceil(ratio * M)`, robust to the ratio being a rounded `k / M`.
pub fn target_count(ratio: f64, m: usize) -> usize {
    let x = ratio * m as f64;
    let r = x.round();
    let k = if (x - r).abs() < 1e-9 { r } else { x.ceil() };
    (k as usize).min(m)
}

/// Uniform sample of `ceil(ratio * M)` edges without replacement.
pub fn random_sparsifier(g: &Graph, ratio: f64, seed: u64) -> Result<EdgeSelection> {
    check_ratio(ratio)?;
    let m = g.edge_count();
    let k = target_count(ratio, m);
    let mut rng = seed::split_rng(seed, stream::RANDOM_SPARSIFIER, 0);
    let kept = rand::seq::index::sample(&mut rng, m, k).into_vec();
    Ok(EdgeSelection::from_indices(m, &kept))
}

/// Each node keeps the edges to its `floor(deg^exponent)` highest-degree
/// neighbors (ties to the lower node index); the result is the union.
pub fn local_degree(g: &Graph, exponent: f64) -> Result<EdgeSelection> {
    if !(0.0..=1.0).contains(&exponent) {
        return Err(Error::InvalidParameter(format!(
            "local degree exponent {exponent} outside [0, 1]"
        )));
    }
    let deg = g.unweighted_degrees();
    let index = edge_index(g);
    let mut keep = vec![false; g.edge_count()];
    for (v, nbrs) in g.neighbors().into_iter().enumerate() {
        if nbrs.is_empty() {
            continue;
        }
        let quota = ((nbrs.len() as f64).powf(exponent) + 1e-9).floor() as usize;
        let mut ranked = nbrs;
        ranked.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        for &u in ranked.iter().take(quota) {
            keep[index[&key(u, v)]] = true;
        }
    }
    Ok(EdgeSelection::from_bools(&keep))
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn edge_index(g: &Graph) -> std::collections::HashMap<(usize, usize), usize> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.key(), i))
        .collect()
}

/// Jaccard similarity of closed neighborhoods for every edge.
pub fn jaccard_scores(g: &Graph) -> Vec<f64> {
    let closed: Vec<Vec<usize>> = g
        .neighbors()
        .into_iter()
        .enumerate()
        .map(|(v, mut n)| {
            let pos = n.partition_point(|&x| x < v);
            n.insert(pos, v);
            n
        })
        .collect();
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = (&closed[e.u], &closed[e.v]);
            let (mut i, mut j, mut inter) = (0, 0, 0usize);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        inter += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            inter as f64 / (a.len() + b.len() - inter) as f64
        })
        .collect()
}

/// Local similarity sparsification.
///
/// Every node ranks its incident edges by Jaccard score (descending, ties to
/// the lower edge index). An edge's local rank is the better of its two
/// endpoint ranks, normalized by that endpoint's degree. Edges are then
/// admitted in order of local rank (ties by higher score, then lower index)
/// until `ceil(ratio * M)` are kept, which is the same as moving a global
/// per-node rank cut and stopping at the requested count.
pub fn local_similarity(g: &Graph, ratio: f64) -> Result<EdgeSelection> {
    check_ratio(ratio)?;
    let m = g.edge_count();
    let k = target_count(ratio, m);
    let scores = jaccard_scores(g);
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.node_count()];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.u].push(i);
        incident[e.v].push(i);
    }
    let mut local = vec![f64::INFINITY; m];
    for edges in &mut incident {
        edges.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
        let d = edges.len() as f64;
        for (r, &i) in edges.iter().enumerate() {
            local[i] = local[i].min((r + 1) as f64 / d);
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        local[a]
            .total_cmp(&local[b])
            .then(scores[b].total_cmp(&scores[a]))
            .then(a.cmp(&b))
    });
    Ok(EdgeSelection::from_indices(m, &order[..k]))
}

/// Moore-Penrose pseudoinverse of a graph Laplacian, built per connected
/// component as `(L_c + J / n_c)^{-1} - J / n_c`.
pub fn laplacian_pseudoinverse(g: &Graph) -> Result<DMatrix<f64>> {
    let n = g.node_count();
    let labels = g.component_labels();
    let count = labels.iter().max().map_or(0, |&x| x + 1);
    let l = g.laplacian();
    let mut pinv = DMatrix::zeros(n, n);
    for c in 0..count {
        let nodes: Vec<usize> = (0..n).filter(|&i| labels[i] == c).collect();
        let k = nodes.len();
        let shift = 1.0 / k as f64;
        let mut sub = DMatrix::from_fn(k, k, |i, j| l[(nodes[i], nodes[j])] + shift);
        if !sub.try_inverse_mut() {
            return Err(Error::InvalidParameter(
                "singular shifted Laplacian block".into(),
            ));
        }
        for i in 0..k {
            for j in 0..k {
                pinv[(nodes[i], nodes[j])] = sub[(i, j)] - shift;
            }
        }
    }
    Ok(pinv)
}

/// `R_m = (e_u - e_v)^T L^+ (e_u - e_v)`. On a disconnected graph each
/// component is handled on its own; edges never straddle components.
pub fn effective_resistances(g: &Graph) -> Result<Vec<f64>> {
    let p = laplacian_pseudoinverse(g)?;
    Ok(g.edges()
        .iter()
        .map(|e| p[(e.u, e.u)] + p[(e.v, e.v)] - 2.0 * p[(e.u, e.v)])
        .collect())
}

/// Draws `ceil(ratio * M)` distinct edges with probability proportional to
/// `mu_m R_m`, renormalizing after each draw.
pub fn effective_resistance_sparsifier(g: &Graph, ratio: f64, seed: u64) -> Result<EdgeSelection> {
    check_ratio(ratio)?;
    if !g.is_connected() {
        return Err(Error::Disconnected(format!(
            "effective resistance sampling needs a connected graph, found {} components",
            g.component_count()
        )));
    }
    let m = g.edge_count();
    let k = target_count(ratio, m);
    let r = effective_resistances(g)?;
    let mut weights: Vec<f64> = g
        .edges()
        .iter()
        .zip(&r)
        .map(|(e, r)| (e.weight * r).max(0.0))
        .collect();
    let mut rng = seed::split_rng(seed, stream::RESISTANCE_SPARSIFIER, 0);
    let mut kept = Vec::with_capacity(k);
    let mut remaining: f64 = weights.iter().sum();
    for _ in 0..k {
        let mut target = rng.gen::<f64>() * remaining;
        let mut pick = None;
        for (i, &w) in weights.iter().enumerate() {
            if w <= 0.0 {
                continue;
            }
            pick = Some(i);
            if target < w {
                break;
            }
            target -= w;
        }
        let i = match pick {
            Some(i) => i,
            // every remaining weight is zero: fall back to the lowest free index
            None => (0..m).find(|i| !kept.contains(i)).expect("k <= m"),
        };
        kept.push(i);
        remaining -= weights[i];
        weights[i] = 0.0;
        if remaining <= 0.0 {
            remaining = weights.iter().sum();
        }
    }
    Ok(EdgeSelection::from_indices(m, &kept))
}
