//! Random and structured graph models. Randomized generators draw from the
//! generator stream of the given seed; all emit edges in canonical
//! `(u < v)` ascending order.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::seed::{self, stream};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Er {
        n: usize,
        p: f64,
    },
    Ba {
        n: usize,
        m_attach: usize,
    },
    Sbm {
        block_sizes: Vec<usize>,
        p_in: f64,
        p_out: f64,
    },
    KnnCircle {
        n: usize,
        k: usize,
    },
}

impl GeneratorSpec {
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        match self {
            GeneratorSpec::Er { n, p } => gen_er(*n, *p, seed),
            GeneratorSpec::Ba { n, m_attach } => gen_ba(*n, *m_attach, seed),
            GeneratorSpec::Sbm {
                block_sizes,
                p_in,
                p_out,
            } => gen_sbm(block_sizes, *p_in, *p_out, seed),
            GeneratorSpec::KnnCircle { n, k } => gen_knn_circle(*n, *k),
        }
    }
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} = {p} outside [0, 1]"
        )))
    }
}

/// Edge probability giving expected mean degree `mean_degree` on `n` nodes.
pub fn er_probability(n: usize, mean_degree: f64) -> f64 {
    (mean_degree / (n as f64 - 1.0)).clamp(0.0, 1.0)
}

pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("ER needs n >= 2, got {n}")));
    }
    check_probability("p", p)?;
    gen_sbm(&[n], p, 0.0, seed)
}

/// Independent Bernoulli edges, `p_in` within a block and `p_out` across.
pub fn gen_sbm(block_sizes: &[usize], p_in: f64, p_out: f64, seed: u64) -> Result<Graph> {
    check_probability("p_in", p_in)?;
    check_probability("p_out", p_out)?;
    if block_sizes.is_empty() || block_sizes.contains(&0) {
        return Err(Error::InvalidParameter(
            "block sizes must be positive".into(),
        ));
    }
    let block: Vec<usize> = block_sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
        .collect();
    let n = block.len();
    let mut rng = seed::split_rng(seed, stream::GENERATOR, 0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let p = if block[u] == block[v] { p_in } else { p_out };
            if rng.gen::<f64>() < p {
                edges.push(Edge::unit(u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Preferential attachment grown from a clique on the first `m_attach`
/// nodes. Each new node links to `m_attach` distinct existing nodes drawn
/// with probability proportional to degree (uniformly while the seed has
/// no edges, i.e. `m_attach = 1`).
pub fn gen_ba(n: usize, m_attach: usize, seed: u64) -> Result<Graph> {
    if m_attach == 0 || m_attach >= n {
        return Err(Error::InvalidParameter(format!(
            "BA needs 1 <= m_attach < n, got m_attach = {m_attach}, n = {n}"
        )));
    }
    let mut rng = seed::split_rng(seed, stream::GENERATOR, 0);
    let mut edges = Vec::new();
    // each node appears once per incident edge endpoint
    let mut targets: Vec<usize> = Vec::new();
    for u in 0..m_attach {
        for v in u + 1..m_attach {
            edges.push(Edge::unit(u, v));
            targets.push(u);
            targets.push(v);
        }
    }
    let mut chosen = Vec::with_capacity(m_attach);
    for new in m_attach..n {
        chosen.clear();
        while chosen.len() < m_attach {
            let t = if targets.is_empty() {
                rng.gen_range(0..new)
            } else {
                targets[rng.gen_range(0..targets.len())]
            };
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push(Edge::unit(t, new));
            targets.push(t);
            targets.push(new);
        }
    }
    Ok(Graph::new(n, edges)?.canonical())
}

/// Ring lattice: node `i` joins `i +- 1, ..., i +- k/2` (mod n). Odd `k` is
/// rounded down to the next even number.
pub fn gen_knn_circle(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "k-NN circle needs 0 < k < n, got k = {k}, n = {n}"
        )));
    }
    let half = k / 2;
    if half == 0 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    let mut edges = Vec::with_capacity(n * half);
    for i in 0..n {
        for s in 1..=half {
            let j = (i + s) % n;
            edges.push(Edge::unit(i.min(j), i.max(j)));
        }
    }
    edges.sort_by_key(|e| (e.u, e.v));
    edges.dedup_by_key(|e| (e.u, e.v));
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        assert_eq!(gen_er(10, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gen_er(10, 1.0, 1).unwrap().edge_count(), 45);
        assert!(gen_er(1, 0.5, 1).is_err());
        assert!(gen_er(5, 1.5, 1).is_err());
    }

    #[test]
    fn ba_edge_count_and_tree() {
        for m in 1..6 {
            let g = gen_ba(40, m, 3).unwrap();
            assert_eq!(g.edge_count(), (40 - m) * m + m * (m - 1) / 2);
        }
        let t = gen_ba(30, 1, 8).unwrap();
        assert_eq!(t.edge_count(), 29);
        assert!(t.is_connected());
        assert_eq!(gen_ba(50, 3, 2).unwrap(), gen_ba(50, 3, 2).unwrap());
    }

    #[test]
    fn sbm_blocks() {
        let g = gen_sbm(&[5, 5], 1.0, 0.0, 1).unwrap();
        assert_eq!(g.edge_count(), 20);
        assert!(g.edges().iter().all(|e| (e.u < 5) == (e.v < 5)));
    }

    #[test]
    fn sbm_degenerate_matches_er() {
        assert_eq!(
            gen_sbm(&[12], 0.3, 0.9, 4).unwrap(),
            gen_er(12, 0.3, 4).unwrap()
        );
    }

    #[test]
    fn knn_circle() {
        let g = gen_knn_circle(20, 10).unwrap();
        assert_eq!(g.edge_count(), 100);
        assert!(g.unweighted_degrees().iter().all(|&d| d == 10));
        let c = gen_knn_circle(7, 2).unwrap();
        assert_eq!(c.edge_count(), 7);
        assert!(c.unweighted_degrees().iter().all(|&d| d == 2));
    }
}
