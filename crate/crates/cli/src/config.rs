//! Serializable description of one CLI run. Output paths are deliberately
//! left out so that replaying an artifact's config anywhere reproduces it.

use std::path::{Path, PathBuf};

use graph_pri::baselines::SparsifierSpec;
use graph_pri::datasets::{benchmark_graphs, karate};
use graph_pri::generators::{er_probability, GeneratorSpec};
use graph_pri::io::{read_edge_list_with, ReadOptions};
use graph_pri::{Error, Graph, PriConfig, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum RunConfig {
    Generate {
        generator: GeneratorSpec,
        seed: u64,
    },
    Sparsify {
        input: InputFile,
        method: SparsifyMethod,
    },
    Benchmark(Benchmark),
    Verify {
        seed: u64,
        cases: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputFile {
    pub path: String,
    pub one_based: bool,
}

impl InputFile {
    pub fn read(&self) -> Result<Graph> {
        read_edge_list_with(
            &self.path,
            ReadOptions {
                one_based: self.one_based,
                node_count: None,
            },
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
// The tag differs from `SparsifierSpec`'s own `method` field.
#[serde(tag = "sparsifier", rename_all = "snake_case")]
pub enum SparsifyMethod {
    Pri(PriConfig),
    Baseline(SparsifierSpec),
}

/// Where a benchmark's single input graph comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum GraphSource {
    Model { generator: GeneratorSpec, seed: u64 },
    Karate,
    File(InputFile),
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSource::Model { generator, seed } => generator.generate(*seed),
            GraphSource::Karate => Ok(karate()),
            GraphSource::File(f) => f.read(),
        }
    }
}

/// Named random-graph models used by the benchmark suites.
pub fn model_spec(
    model: &str,
    n: usize,
    mean_degree: f64,
    m_attach: usize,
) -> Result<GeneratorSpec> {
    Ok(match model {
        "er" => GeneratorSpec::Er {
            n,
            p: er_probability(n, mean_degree),
        },
        "ba" => GeneratorSpec::Ba { n, m_attach },
        "sbm" => {
            if !n.is_multiple_of(4) {
                return Err(Error::InvalidParameter(format!(
                    "sbm model splits n into 4 equal blocks, got n = {n}"
                )));
            }
            GeneratorSpec::Sbm {
                block_sizes: vec![n / 4; 4],
                p_in: 0.25,
                p_out: 0.0078125,
            }
        }
        "knn-circle" => GeneratorSpec::KnnCircle { n, k: 10 },
        other => {
            return Err(Error::InvalidParameter(format!("unknown model {other}")));
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "snake_case")]
pub enum Benchmark {
    Tradeoff {
        graph: GraphSource,
        ratios: Vec<f64>,
        replicates: usize,
        seed: u64,
    },
    BetaCurve {
        graph: GraphSource,
        betas: Vec<f64>,
        replicates: usize,
        pri: PriConfig,
    },
    Comparison {
        graphs: Vec<String>,
        data_dir: Option<String>,
        ratios: Vec<f64>,
        replicates: usize,
        pri: PriConfig,
        /// Trade-off weights swept to reach each ratio; `pri.beta` alone when empty.
        #[serde(default)]
        betas: Vec<f64>,
        seed: u64,
    },
    Assumption {
        n: usize,
        degrees: Vec<f64>,
        replicates: usize,
        seed: u64,
    },
    Corollary {
        graph: GraphSource,
        ratio: f64,
        trials: usize,
        seed: u64,
    },
}

impl Benchmark {
    pub fn name(&self) -> &'static str {
        match self {
            Benchmark::Tradeoff { .. } => "tradeoff",
            Benchmark::BetaCurve { .. } => "beta-curve",
            Benchmark::Comparison { .. } => "comparison",
            Benchmark::Assumption { .. } => "assumption",
            Benchmark::Corollary { .. } => "corollary",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            Benchmark::BetaCurve { pri, .. } => pri.seed,
            Benchmark::Tradeoff { seed, .. }
            | Benchmark::Comparison { seed, .. }
            | Benchmark::Assumption { seed, .. }
            | Benchmark::Corollary { seed, .. } => *seed,
        }
    }
}

/// The benchmark graphs selected by name (`G1`..`G6`), in the order given.
pub fn selected_graphs(
    names: &[String],
    seed: u64,
    data_dir: Option<&str>,
) -> Result<Vec<graph_pri::datasets::BenchmarkGraph>> {
    let all = benchmark_graphs(seed, data_dir.map(Path::new))?;
    names
        .iter()
        .map(|n| {
            all.iter()
                .find(|b| b.name.eq_ignore_ascii_case(n))
                .cloned()
                .ok_or_else(|| Error::InvalidParameter(format!("unknown benchmark graph {n}")))
        })
        .collect()
}

/// Prefix marking the embedded config in text artifacts.
pub const CONFIG_PREFIX: &str = "# config: ";

impl RunConfig {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("run config serializes")
    }

    pub fn comment_line(&self) -> String {
        format!(
            "{CONFIG_PREFIX}{}\n",
            serde_json::to_string(self).expect("run config serializes")
        )
    }

    /// Recovers the config embedded in a CSV, edge-list or JSON artifact.
    pub fn from_artifact(path: &Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        if let Some(line) = text.lines().find_map(|l| l.strip_prefix(CONFIG_PREFIX)) {
            return Ok(serde_json::from_str(line)?);
        }
        let value: serde_json::Value = serde_json::from_str(&text)?;
        let config = value
            .get("config")
            .or_else(|| value.get("provenance").and_then(|p| p.get("config")))
            .ok_or_else(|| {
                Error::InvalidParameter(format!("{} has no embedded config", path.display()))
            })?;
        Ok(serde_json::from_value(config.clone())?)
    }
}

/// Output locations for one run.
#[derive(Debug, Clone, Default)]
pub struct Outputs {
    /// Edge list destination; stdout when absent.
    pub edge_list: Option<PathBuf>,
    pub report: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
}
