//! `graph-pri` command line.
//!
//! Exit codes: 0 success, 1 property or benchmark failure, 2 usage or I/O
//! error.

mod config;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_pri::baselines::{SparsifierMethod, SparsifierSpec};
use graph_pri::generators::{er_probability, GeneratorSpec};
use graph_pri::optimizer::{FinalMask, GradientMode, HardenMode};
use graph_pri::{Error, PriConfig};

use config::{model_spec, Benchmark, GraphSource, InputFile, Outputs, RunConfig, SparsifyMethod};

#[derive(Parser)]
#[command(
    name = "graph-pri",
    version,
    about = "Graph sparsification by relevant information"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a synthetic graph as an edge list.
    Generate {
        #[command(subcommand)]
        model: GenerateModel,
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Sparsify an edge-list graph.
    Sparsify(SparsifyArgs),
    /// Run an experiment suite and write `<suite>.csv` and `<suite>.json`.
    Benchmark(BenchmarkArgs),
    /// Check the numerical invariants.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases per property.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Also write the results as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Re-run the config embedded in an artifact.
    Replay {
        artifact: PathBuf,
        /// Edge-list output (generate, sparsify); stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// JSON report output (sparsify, verify).
        #[arg(long)]
        report: Option<PathBuf>,
        /// Directory for benchmark files.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenerateModel {
    /// Erdos-Renyi G(n, p).
    Er {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long, conflicts_with = "mean_degree")]
        p: Option<f64>,
        /// Sets p = d / (n - 1).
        #[arg(long)]
        mean_degree: Option<f64>,
    },
    /// Barabasi-Albert preferential attachment.
    Ba {
        #[arg(short, long)]
        n: usize,
        /// Edges added per new node.
        #[arg(short, long)]
        m: usize,
    },
    /// Stochastic block model.
    Sbm {
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
        #[arg(long)]
        p_in: f64,
        #[arg(long)]
        p_out: f64,
    },
    /// Ring where each node links to its k nearest neighbours.
    KnnCircle {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Pri,
    Random,
    LocalDegree,
    LocalSimilarity,
    EffectiveResistance,
}

#[derive(Args)]
struct PriArgs {
    #[arg(long)]
    beta: Option<f64>,
    /// Log-degree barrier weight.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    temperature: Option<f64>,
    /// Anneal the temperature linearly to this value.
    #[arg(long)]
    temperature_final: Option<f64>,
    #[arg(long)]
    step_size: Option<f64>,
    /// Gumbel samples per iteration.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    iterations: Option<usize>,
    /// Use relaxed instead of straight-through hard samples.
    #[arg(long)]
    soft_sampling: bool,
    /// Replace the entropy term by the degree-distribution entropy.
    #[arg(long)]
    degree_approx: bool,
    /// Optimize the keep probabilities directly, without sampling.
    #[arg(long)]
    deterministic: bool,
    /// Final mask keeps the k most probable edges.
    #[arg(long, conflicts_with = "harden_threshold")]
    harden_top_k: Option<usize>,
    /// Final mask keeps edges with keep probability at or above this value.
    #[arg(long)]
    harden_threshold: Option<f64>,
}

impl PriArgs {
    fn config(&self, seed: u64) -> PriConfig {
        let d = PriConfig::default();
        PriConfig {
            beta: self.beta.unwrap_or(d.beta),
            alpha: self.alpha.unwrap_or(d.alpha),
            temperature: self.temperature.unwrap_or(d.temperature),
            temperature_final: self.temperature_final.or(d.temperature_final),
            step_size: self.step_size.unwrap_or(d.step_size),
            samples: self.samples.unwrap_or(d.samples),
            max_iterations: self.iterations.unwrap_or(d.max_iterations),
            seed,
            hard_sampling: !self.soft_sampling,
            use_degree_entropy_approx: self.degree_approx,
            gradient_mode: if self.deterministic {
                GradientMode::Deterministic
            } else {
                GradientMode::Sampled
            },
            final_mask: match (self.harden_top_k, self.harden_threshold) {
                (Some(k), _) => FinalMask::Harden(HardenMode::TopK(k)),
                (None, Some(t)) => FinalMask::Harden(HardenMode::Threshold(t)),
                (None, None) => d.final_mask,
            },
        }
    }
}

#[derive(Args)]
struct SparsifyArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    method: Method,
    /// Kept-edge ratio (all methods but local-degree). For pri it keeps the
    /// most probable edges after training.
    #[arg(long)]
    ratio: Option<f64>,
    /// Local-degree exponent.
    #[arg(long)]
    exponent: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Node ids in the input start at 1.
    #[arg(long)]
    one_based: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    pri: PriArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Tradeoff,
    BetaCurve,
    Comparison,
    Assumption,
    Corollary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Er,
    Ba,
    Sbm,
    KnnCircle,
    Karate,
}

#[derive(Args)]
struct BenchmarkArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(short, long, default_value = ".")]
    out_dir: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "er")]
    model: Model,
    /// Node count for generated graphs.
    #[arg(short, long, default_value_t = 200)]
    n: usize,
    #[arg(long, default_value_t = 10.0)]
    mean_degree: f64,
    /// Edges per new node for the BA model.
    #[arg(short, long, default_value_t = 5)]
    m: usize,
    /// Read the graph from an edge list instead of a model.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    one_based: bool,
    #[arg(long, value_delimiter = ',')]
    ratios: Option<Vec<f64>>,
    #[arg(long)]
    replicates: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    betas: Option<Vec<f64>>,
    /// Target mean degrees for the assumption suite.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<f64>>,
    /// Benchmark graph names for the comparison suite.
    #[arg(long, value_delimiter = ',')]
    graphs: Option<Vec<String>>,
    /// Directory holding external benchmark edge lists.
    #[arg(long)]
    data_dir: Option<PathBuf>,
    /// Kept-edge ratio for the corollary suite.
    #[arg(long, default_value_t = 0.5)]
    ratio: f64,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[command(flatten)]
    pri: PriArgs,
}

fn path_string(p: &std::path::Path) -> String {
    p.display().to_string()
}

impl BenchmarkArgs {
    fn graph(&self) -> Result<GraphSource, Error> {
        if let Some(p) = &self.input {
            return Ok(GraphSource::File(InputFile {
                path: path_string(p),
                one_based: self.one_based,
            }));
        }
        let name = match self.model {
            Model::Karate => return Ok(GraphSource::Karate),
            Model::Er => "er",
            Model::Ba => "ba",
            Model::Sbm => "sbm",
            Model::KnnCircle => "knn-circle",
        };
        Ok(GraphSource::Model {
            generator: model_spec(name, self.n, self.mean_degree, self.m)?,
            seed: graph_pri::seed::derive(self.seed, graph_pri::seed::stream::GENERATOR, 0),
        })
    }

    fn config(&self) -> Result<Benchmark, Error> {
        let ratios = |default: Vec<f64>| self.ratios.clone().unwrap_or(default);
        let grid = |step: usize, count: usize| -> Vec<f64> {
            (1..=count).map(|i| (i * step) as f64 / 100.0).collect()
        };
        Ok(match self.suite {
            Suite::Tradeoff => Benchmark::Tradeoff {
                graph: self.graph()?,
                ratios: ratios(grid(5, 20)),
                replicates: self.replicates.unwrap_or(100),
                seed: self.seed,
            },
            Suite::BetaCurve => Benchmark::BetaCurve {
                graph: self.graph()?,
                betas: self
                    .betas
                    .clone()
                    .unwrap_or_else(|| vec![1.0, 2.0, 3.0, 4.0, 5.0, 10.0, 50.0]),
                replicates: self.replicates.unwrap_or(10),
                pri: self.pri.config(self.seed),
            },
            Suite::Comparison => Benchmark::Comparison {
                graphs: self.graphs.clone().unwrap_or_else(|| {
                    ["G1", "G2", "G3", "G4", "G5", "G6"]
                        .map(String::from)
                        .to_vec()
                }),
                data_dir: self.data_dir.as_deref().map(path_string),
                ratios: ratios(grid(10, 9)),
                replicates: self.replicates.unwrap_or(5),
                pri: self.pri.config(self.seed),
                betas: self
                    .betas
                    .clone()
                    .unwrap_or_else(|| vec![0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 50.0]),
                seed: self.seed,
            },
            Suite::Assumption => Benchmark::Assumption {
                n: self.n,
                degrees: self
                    .degrees
                    .clone()
                    .unwrap_or_else(|| vec![1.6, 2.5, 3.0, 4.0, 5.0]),
                replicates: self.replicates.unwrap_or(100),
                seed: self.seed,
            },
            Suite::Corollary => Benchmark::Corollary {
                graph: self.graph()?,
                ratio: self.ratio,
                trials: self.trials,
                seed: self.seed,
            },
        })
    }
}

fn generator(model: &GenerateModel) -> Result<GeneratorSpec, Error> {
    Ok(match model {
        GenerateModel::Er { n, p, mean_degree } => GeneratorSpec::Er {
            n: *n,
            p: match (p, mean_degree) {
                (Some(p), _) => *p,
                (None, Some(d)) => er_probability(*n, *d),
                (None, None) => {
                    return Err(Error::InvalidParameter(
                        "er needs -p or --mean-degree".into(),
                    ))
                }
            },
        },
        GenerateModel::Ba { n, m } => GeneratorSpec::Ba {
            n: *n,
            m_attach: *m,
        },
        GenerateModel::Sbm {
            blocks,
            p_in,
            p_out,
        } => GeneratorSpec::Sbm {
            block_sizes: blocks.clone(),
            p_in: *p_in,
            p_out: *p_out,
        },
        GenerateModel::KnnCircle { n, k } => GeneratorSpec::KnnCircle { n: *n, k: *k },
    })
}

fn sparsify_config(a: &SparsifyArgs) -> Result<RunConfig, Error> {
    let input = InputFile {
        path: path_string(&a.input),
        one_based: a.one_based,
    };
    let baseline = |method: SparsifierMethod, target: Option<f64>, flag: &str| {
        target
            .map(|target| {
                SparsifyMethod::Baseline(SparsifierSpec {
                    method,
                    target,
                    seed: a.seed,
                })
            })
            .ok_or_else(|| Error::InvalidParameter(format!("{} needs {flag}", method.name())))
    };
    let method = match a.method {
        Method::Pri => {
            let mut cfg = a.pri.config(a.seed);
            if let Some(r) = a.ratio {
                let m = InputFile::read(&input)?.edge_count();
                if !(r > 0.0 && r <= 1.0) {
                    return Err(Error::InvalidParameter(format!("ratio {r} outside (0, 1]")));
                }
                cfg.final_mask =
                    FinalMask::Harden(HardenMode::TopK(graph_pri::baselines::target_count(r, m)));
            }
            SparsifyMethod::Pri(cfg)
        }
        Method::Random => baseline(SparsifierMethod::Random, a.ratio, "--ratio")?,
        Method::LocalDegree => baseline(SparsifierMethod::LocalDegree, a.exponent, "--exponent")?,
        Method::LocalSimilarity => baseline(SparsifierMethod::LocalSimilarity, a.ratio, "--ratio")?,
        Method::EffectiveResistance => {
            baseline(SparsifierMethod::EffectiveResistance, a.ratio, "--ratio")?
        }
    };
    Ok(RunConfig::Sparsify { input, method })
}

fn plan(cmd: Command) -> Result<(RunConfig, Outputs), Error> {
    Ok(match cmd {
        Command::Generate {
            model,
            seed,
            output,
        } => (
            RunConfig::Generate {
                generator: generator(&model)?,
                seed,
            },
            Outputs {
                edge_list: output,
                ..Outputs::default()
            },
        ),
        Command::Sparsify(a) => {
            let config = sparsify_config(&a)?;
            (
                config,
                Outputs {
                    edge_list: a.output,
                    report: a.report,
                    out_dir: None,
                },
            )
        }
        Command::Benchmark(a) => (
            RunConfig::Benchmark(a.config()?),
            Outputs {
                out_dir: Some(a.out_dir),
                ..Outputs::default()
            },
        ),
        Command::Verify {
            seed,
            cases,
            report,
        } => (
            RunConfig::Verify { seed, cases },
            Outputs {
                report,
                ..Outputs::default()
            },
        ),
        Command::Replay {
            artifact,
            output,
            report,
            out_dir,
        } => (
            RunConfig::from_artifact(&artifact)?,
            Outputs {
                edge_list: output,
                report,
                out_dir,
            },
        ),
    })
}

/// Usage and I/O problems map to 2, everything else to 1.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io { .. } | Error::Parse { .. } | Error::InvalidParameter(_) | Error::Json(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = plan(cli.command).and_then(|(config, out)| run::execute(&config, &out));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
