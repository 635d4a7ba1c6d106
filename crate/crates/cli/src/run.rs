//! Executes a [`RunConfig`]. Everything written is a function of the config
//! and the input files.

use std::fs;
use std::path::{Path, PathBuf};

use graph_pri::eval::harness::{assumption_curve, AssumptionRow, ComparisonMethod, Curve};
use graph_pri::eval::report::{write_csv, write_json};
use graph_pri::eval::{
    assumption_check, beta_sparsity_curve, corollary_check, curve_average, sparsifier_comparison,
    tradeoff_curve, HarnessReport, Provenance,
};
use graph_pri::io::edge_list_string;
use graph_pri::verify::{self, VerifyOptions};
use graph_pri::{sparsify_pri, Error, Graph, Result};
use serde_json::json;

use crate::config::{selected_graphs, Benchmark, Outputs, RunConfig, SparsifyMethod};

pub const COMMIT: &str = env!("GRAPH_PRI_COMMIT");

/// Whether the run met its own success criterion (verify properties, or a
/// benchmark producing any result at all).
pub type Passed = bool;

fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|source| Error::Io {
            path: dir.display().to_string(),
            source,
        })?;
    }
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit_edge_list(config: &RunConfig, g: &Graph, dest: Option<&Path>) -> Result<()> {
    let text = config.comment_line() + &edge_list_string(g);
    match dest {
        Some(p) => write_text(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

pub fn execute(config: &RunConfig, out: &Outputs) -> Result<Passed> {
    match config {
        RunConfig::Generate { generator, seed } => {
            let g = generator.generate(*seed)?;
            emit_edge_list(config, &g, out.edge_list.as_deref())?;
            eprintln!(
                "generated {} nodes, {} edges",
                g.node_count(),
                g.edge_count()
            );
            Ok(true)
        }
        RunConfig::Sparsify { input, method } => {
            let g = input.read()?;
            let (mask, report) = match method {
                SparsifyMethod::Pri(cfg) => {
                    let r = sparsify_pri(&g, cfg)?;
                    for w in &r.warnings {
                        eprintln!("warning: {w}");
                    }
                    (r.selection.clone(), serde_json::to_value(&r)?)
                }
                SparsifyMethod::Baseline(spec) => {
                    let s = spec.run(&g)?;
                    let report = json!({
                        "selection": s.as_slice(),
                        "retained_edge_count": s.support_size(),
                    });
                    (s, report)
                }
            };
            let sub = g.subgraph(mask.as_slice())?;
            emit_edge_list(config, &sub, out.edge_list.as_deref())?;
            if let Some(path) = &out.report {
                write_text(
                    path,
                    &pretty(&json!({ "config": config, "report": report })),
                )?;
            }
            eprintln!("kept {} of {} edges", sub.edge_count(), g.edge_count());
            Ok(true)
        }
        RunConfig::Verify { seed, cases } => {
            let results = verify::run(VerifyOptions {
                seed: *seed,
                cases: *cases,
            });
            for r in &results {
                println!(
                    "{} {}: {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
            }
            if let Some(path) = &out.report {
                write_text(
                    path,
                    &pretty(&json!({ "config": config, "results": results })),
                )?;
            }
            Ok(results.iter().all(|r| r.passed))
        }
        RunConfig::Benchmark(b) => benchmark(config, b, out),
    }
}

fn benchmark(config: &RunConfig, b: &Benchmark, out: &Outputs) -> Result<Passed> {
    let (curves, extra, passed) = match b {
        Benchmark::Tradeoff {
            graph,
            ratios,
            replicates,
            seed,
        } => {
            let g = graph.load()?;
            let c = tradeoff_curve(&g, ratios, *replicates, *seed)?;
            for p in &c.points {
                println!(
                    "ratio {:.3}  entropy {:.6}  divergence {:.6}",
                    p.x,
                    p.mean("entropy").unwrap_or(f64::NAN),
                    p.mean("divergence").unwrap_or(f64::NAN)
                );
            }
            let extra = json!({ "nodes": g.node_count(), "edges": g.edge_count() });
            (vec![c], extra, true)
        }
        Benchmark::BetaCurve {
            graph,
            betas,
            replicates,
            pri,
        } => {
            let g = graph.load()?;
            let r = beta_sparsity_curve(&g, betas, *replicates, pri)?;
            for p in &r.curve.points {
                println!(
                    "beta {}  retained {:.2}",
                    p.x,
                    p.mean("retained_edges").unwrap_or(f64::NAN)
                );
            }
            println!("spearman {:.4}", r.spearman);
            let extra = json!({
                "nodes": g.node_count(),
                "edges": g.edge_count(),
                "spearman": r.spearman,
            });
            (vec![r.curve], extra, true)
        }
        Benchmark::Comparison {
            graphs,
            data_dir,
            ratios,
            replicates,
            pri,
            betas,
            seed,
        } => comparison(
            graphs,
            data_dir.as_deref(),
            ratios,
            *replicates,
            pri,
            betas,
            *seed,
        )?,
        Benchmark::Assumption {
            n,
            degrees,
            replicates,
            seed,
        } => {
            let rows: Vec<AssumptionRow> = assumption_check(*n, degrees, *replicates, *seed)?;
            for row in &rows {
                match (&row.percent, &row.percent_absent) {
                    (Some(s), Some(a)) => println!(
                        "degree {}  realized {:.3}  nonnegative {:.2}% (std {:.2}, n {})  absent pairs only {:.2}%",
                        row.target_degree, row.mean_degree, s.mean, s.std, s.n, a.mean
                    ),
                    _ => println!("degree {}  no usable graph", row.target_degree),
                }
            }
            let any = rows.iter().any(|r| !r.flagged);
            (vec![assumption_curve(&rows)], json!({ "rows": rows }), any)
        }
        Benchmark::Corollary {
            graph,
            ratio,
            trials,
            seed,
        } => {
            let g = graph.load()?;
            let r = corollary_check(&g, *ratio, *trials, *seed)?;
            println!(
                "re-adding one edge lowered the divergence in {:.2}% of {} trials",
                100.0 * r.fraction,
                r.trials
            );
            (Vec::new(), json!({ "result": r }), true)
        }
    };
    let report = HarnessReport {
        experiment: b.name().into(),
        provenance: Provenance {
            seed: b.seed(),
            commit: COMMIT.into(),
            config: config.to_json(),
        },
        curves,
        extra,
    };
    let dir = out.out_dir.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|source| Error::Io {
        path: dir.display().to_string(),
        source,
    })?;
    write_csv(&dir.join(format!("{}.csv", b.name())), &report)?;
    write_json(&dir.join(format!("{}.json", b.name())), &report)?;
    Ok(passed)
}

type SuiteOutput = (Vec<Curve>, serde_json::Value, Passed);

fn comparison(
    names: &[String],
    data_dir: Option<&str>,
    ratios: &[f64],
    replicates: usize,
    pri: &graph_pri::PriConfig,
    betas: &[f64],
    seed: u64,
) -> Result<SuiteOutput> {
    let mut curves = Vec::new();
    let mut per_graph = Vec::new();
    let mut warnings = Vec::new();
    for bg in selected_graphs(names, seed, data_dir)? {
        let Some(g) = &bg.loaded else {
            let note = bg.note.clone().unwrap_or_default();
            eprintln!("warning: {}: {note}", bg.name);
            warnings.push(format!("{}: {note}", bg.name));
            per_graph.push(json!({ "name": bg.name, "available": false, "note": note }));
            continue;
        };
        let result = sparsifier_comparison(
            g,
            &ComparisonMethod::all(),
            ratios,
            replicates,
            pri,
            betas,
            seed,
        );
        let cmp = match result {
            Ok(c) => c,
            Err(e) => {
                eprintln!("warning: {}: {e}", bg.name);
                warnings.push(format!("{}: {e}", bg.name));
                per_graph
                    .push(json!({ "name": bg.name, "available": true, "error": e.to_string() }));
                continue;
            }
        };
        warnings.extend(cmp.warnings.iter().map(|w| format!("{}: {w}", bg.name)));
        let avg = |series: &str| {
            cmp.curves
                .iter()
                .find(|c| c.series == series)
                .and_then(|c| curve_average(c, "spectral_distance"))
        };
        let (p, r) = (avg("pri"), avg("random"));
        let not_worse = matches!((p, r), (Some(p), Some(r)) if p <= r);
        println!(
            "{}  pri {:.6}  random {:.6}  pri_not_worse {not_worse}",
            bg.name,
            p.unwrap_or(f64::NAN),
            r.unwrap_or(f64::NAN)
        );
        per_graph.push(json!({
            "name": bg.name,
            "available": true,
            "nodes": g.node_count(),
            "edges": g.edge_count(),
            "pri_mean_spectral_distance": p,
            "random_mean_spectral_distance": r,
            "pri_not_worse_than_random": not_worse,
        }));
        for mut c in cmp.curves {
            c.series = format!("{}/{}", bg.name, c.series);
            curves.push(c);
        }
    }
    let passed = !curves.is_empty();
    let extra = json!({
        "graphs": per_graph,
        "warnings": warnings,
        "note": "Baseline parameterizations follow this implementation, not external toolkits; \
                 compare trends across methods rather than exact curves.",
    });
    Ok((curves, extra, passed))
}
