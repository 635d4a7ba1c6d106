//! The six benchmark graphs. G1 and G2 are synthetic, G3 (karate club) is
//! bundled, G4 to G6 are read from a user-supplied directory when present.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::generators::{gen_knn_circle, gen_sbm};
use crate::graph::Graph;
use crate::io::{parse_edge_list, read_edge_list_with, ReadOptions};

const KARATE: &str = include_str!("../data/karate.edgelist");

/// Zachary's karate club: 34 nodes, 78 unweighted edges.
pub fn karate() -> Graph {
    parse_edge_list(KARATE, "karate.edgelist", ReadOptions::default())
        .expect("bundled karate edge list is valid")
}

/// G1: 10-NN ring on 20 nodes.
pub fn g1() -> Graph {
    gen_knn_circle(20, 10).expect("valid parameters")
}

/// G2: four communities of 30 nodes, `p_in = 2^-2`, `p_out = 2^-7`.
pub fn g2(seed: u64) -> Graph {
    gen_sbm(&[30, 30, 30, 30], 0.25, 0.0078125, seed).expect("valid parameters")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchmarkGraph {
    pub name: String,
    pub graph: Option<GraphSummary>,
    #[serde(skip)]
    pub loaded: Option<Graph>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphSummary {
    pub nodes: usize,
    pub edges: usize,
}

/// External graphs: `(name, file name, expected nodes, expected edges)`.
pub const EXTERNAL: [(&str, &str, usize, usize); 3] = [
    ("G4", "train_bombing.edgelist", 64, 243),
    ("G5", "polbooks.edgelist", 105, 441),
    ("G6", "jazz.edgelist", 198, 2742),
];

fn entry(name: &str, g: Graph) -> BenchmarkGraph {
    BenchmarkGraph {
        name: name.into(),
        graph: Some(GraphSummary {
            nodes: g.node_count(),
            edges: g.edge_count(),
        }),
        loaded: Some(g),
        note: None,
    }
}

/// All six graphs, with G4 to G6 marked missing (and a note saying why)
/// when `data_dir` is absent or lacks the file. Files may be 0- or 1-based;
/// 1-based is assumed when no line uses index 0.
pub fn benchmark_graphs(seed: u64, data_dir: Option<&Path>) -> Result<Vec<BenchmarkGraph>> {
    let mut out = vec![
        entry("G1", g1()),
        entry("G2", g2(seed)),
        entry("G3", karate()),
    ];
    for (name, file, _, _) in EXTERNAL {
        let path = data_dir.map(|d| d.join(file));
        match path {
            Some(p) if p.exists() => out.push(entry(name, load_external(&p)?)),
            _ => out.push(BenchmarkGraph {
                name: name.into(),
                graph: None,
                loaded: None,
                note: Some(format!("{file} not found; skipped")),
            }),
        }
    }
    Ok(out)
}

pub fn load_external(path: &Path) -> Result<Graph> {
    let g = read_edge_list_with(path, ReadOptions::default())?;
    if g.degrees()[0] > 0.0 {
        return Ok(g);
    }
    let one_based = ReadOptions {
        one_based: true,
        node_count: None,
    };
    Ok(read_edge_list_with(path, one_based).unwrap_or(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_graphs() {
        let k = karate();
        assert_eq!((k.node_count(), k.edge_count()), (34, 78));
        assert!(k.is_connected());
        assert_eq!(k.laplacian().trace(), 156.0);
        let g = g1();
        assert_eq!((g.node_count(), g.edge_count()), (20, 100));
        assert_eq!(g2(1).node_count(), 120);
    }

    #[test]
    fn missing_externals_are_flagged() {
        let all = benchmark_graphs(1, None).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all[3..]
            .iter()
            .all(|b| b.loaded.is_none() && b.note.is_some()));
    }
}
