//! Undirected weighted graphs stored as a node count plus an ordered edge list.
//!
//! The position of an edge in the list is its canonical index. Every
//! [`EdgeSelection`](crate::EdgeSelection) is interpreted against that order, so
//! the order is never changed after construction.

use std::collections::HashMap;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

impl Edge {
    pub fn new(u: usize, v: usize, weight: f64) -> Self {
        Self { u, v, weight }
    }

    pub fn unit(u: usize, v: usize) -> Self {
        Self::new(u, v, 1.0)
    }

    /// Endpoints ordered as (smaller, larger).
    pub fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    node_count: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Validates and builds a graph. Rejects self-loops, duplicate unordered
    /// pairs, out-of-range endpoints and non-positive weights.
    pub fn new(node_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::NoNodes);
        }
        let mut seen: HashMap<(usize, usize), usize> = HashMap::with_capacity(edges.len());
        for (index, e) in edges.iter().enumerate() {
            for node in [e.u, e.v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange {
                        index,
                        node,
                        node_count,
                    });
                }
            }
            if e.u == e.v {
                return Err(Error::SelfLoop { index, node: e.u });
            }
            if !(e.weight > 0.0 && e.weight.is_finite()) {
                return Err(Error::InvalidWeight {
                    index,
                    weight: e.weight,
                });
            }
            if let Some(&first) = seen.get(&e.key()) {
                return Err(Error::DuplicateEdge {
                    index,
                    first,
                    u: e.u,
                    v: e.v,
                });
            }
            seen.insert(e.key(), index);
        }
        Ok(Self { node_count, edges })
    }

    /// Unweighted graph from endpoint pairs.
    pub fn from_pairs(node_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            node_count,
            pairs.iter().map(|&(u, v)| Edge::unit(u, v)).collect(),
        )
    }

    /// Weighted graph from `(u, v, weight)` triples.
    pub fn from_triples(node_count: usize, triples: &[(usize, usize, f64)]) -> Result<Self> {
        Self::new(
            node_count,
            triples
                .iter()
                .map(|&(u, v, w)| Edge::new(u, v, w))
                .collect(),
        )
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1.0)
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.iter().any(|e| e.key() == key)
    }

    /// Weighted degrees `d_i = sum_j W_ij`.
    pub fn degrees(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.node_count];
        for e in &self.edges {
            d[e.u] += e.weight;
            d[e.v] += e.weight;
        }
        d
    }

    /// Number of incident edges per node, ignoring weights.
    pub fn unweighted_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.node_count];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    /// Sorted neighbor lists.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn adjacency(&self) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.node_count, self.node_count);
        for e in &self.edges {
            a[(e.u, e.v)] += e.weight;
            a[(e.v, e.u)] += e.weight;
        }
        a
    }

    /// Combinatorial Laplacian `D - W`.
    pub fn laplacian(&self) -> DMatrix<f64> {
        let n = self.node_count;
        let mut l = DMatrix::zeros(n, n);
        for e in &self.edges {
            l[(e.u, e.u)] += e.weight;
            l[(e.v, e.v)] += e.weight;
            l[(e.u, e.v)] -= e.weight;
            l[(e.v, e.u)] -= e.weight;
        }
        l
    }

    /// Component label per node, labels numbered from 0 in order of first node.
    pub fn component_labels(&self) -> Vec<usize> {
        let adj = self.neighbors();
        let mut label = vec![usize::MAX; self.node_count];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..self.node_count {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Number of connected components, isolated nodes included.
    pub fn component_count(&self) -> usize {
        self.component_labels()
            .into_iter()
            .max()
            .map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Keeps the edges whose mask entry is nonzero, in their original order,
    /// on the same node set.
    pub fn subgraph(&self, mask: &[f64]) -> Result<Graph> {
        if mask.len() != self.edges.len() {
            return Err(Error::LengthMismatch {
                expected: self.edges.len(),
                actual: mask.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .zip(mask)
            .filter(|(_, &w)| w != 0.0)
            .map(|(e, _)| *e)
            .collect();
        Ok(Graph {
            node_count: self.node_count,
            edges,
        })
    }

    /// Copy of the graph with one more edge appended at the end of the list.
    pub fn with_edge(&self, edge: Edge) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push(edge);
        Graph::new(self.node_count, edges)
    }

    /// Same graph with every edge written `u < v` and the list sorted by
    /// `(u, v)`.
    pub fn canonical(&self) -> Graph {
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                let (u, v) = e.key();
                Edge::new(u, v, e.weight)
            })
            .collect();
        edges.sort_by_key(|e| (e.u, e.v));
        Graph {
            node_count: self.node_count,
            edges,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.edges.iter().all(|e| e.u < e.v)
            && self
                .edges
                .windows(2)
                .all(|p| (p[0].u, p[0].v) < (p[1].u, p[1].v))
    }

    /// Unordered pairs that are not edges, in `(u, v)` lexicographic order.
    pub fn absent_pairs(&self) -> Vec<(usize, usize)> {
        let adj = self.neighbors();
        let mut out = Vec::new();
        for u in 0..self.node_count {
            for v in (u + 1)..self.node_count {
                if adj[u].binary_search(&v).is_err() {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sum of squared adjacency entries, `tr(W^2)`.
    pub fn trace_adjacency_squared(&self) -> f64 {
        2.0 * self.edges.iter().map(|e| e.weight * e.weight).sum::<f64>()
    }
}

/// Weighted degrees of a graph.
pub fn degrees(g: &Graph) -> Vec<f64> {
    g.degrees()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![2.0, 2.0, 2.0]);
        assert!(g.is_connected());
        assert!(g.absent_pairs().is_empty());
    }

    #[test]
    fn rejects_invalid_edges() {
        assert!(matches!(
            Graph::from_pairs(2, &[(0, 0)]),
            Err(Error::SelfLoop { index: 0, node: 0 })
        ));
        assert!(matches!(
            Graph::from_pairs(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge {
                index: 1,
                first: 0,
                ..
            })
        ));
        assert!(matches!(
            Graph::from_pairs(2, &[(0, 2)]),
            Err(Error::NodeOutOfRange { node: 2, .. })
        ));
        assert!(matches!(
            Graph::from_triples(2, &[(0, 1, 0.0)]),
            Err(Error::InvalidWeight { .. })
        ));
        assert!(matches!(
            Graph::from_triples(2, &[(0, 1, f64::NAN)]),
            Err(Error::InvalidWeight { .. })
        ));
        assert!(matches!(Graph::from_pairs(0, &[]), Err(Error::NoNodes)));
    }

    #[test]
    fn degree_examples() {
        let star = Graph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degrees(), vec![3.0, 1.0, 1.0, 1.0]);
        let path = Graph::from_triples(3, &[(0, 1, 2.0), (1, 2, 3.0)]).unwrap();
        assert_eq!(path.degrees(), vec![2.0, 5.0, 3.0]);
        assert_eq!(
            path.degrees().iter().sum::<f64>(),
            2.0 * path.total_weight()
        );
    }

    #[test]
    fn components_and_subgraph() {
        let g = Graph::from_pairs(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.component_count(), 2);
        let s = g.subgraph(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(s.edges(), &[Edge::unit(0, 1), Edge::unit(3, 4)]);
        assert_eq!(s.component_count(), 3);
        assert!(g.subgraph(&[1.0]).is_err());
    }

    #[test]
    fn canonical_sorts_and_orients() {
        let g = Graph::from_pairs(4, &[(3, 2), (1, 0), (2, 0)]).unwrap();
        assert!(!g.is_canonical());
        let c = g.canonical();
        assert!(c.is_canonical());
        let keys: Vec<_> = c.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(keys, vec![(0, 1), (0, 2), (2, 3)]);
    }
}
