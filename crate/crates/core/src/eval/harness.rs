//! Experiment drivers. Every run is a deterministic function of its inputs
//! and seed; results are reduced in (grid point, replicate) order.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::metrics::{centralization, fiedler_vector, spectral_distance};
use super::stats::{spearman, Summary};
use crate::baselines::{
    effective_resistance_sparsifier, local_degree, local_similarity, random_sparsifier,
    target_count, SparsifierMethod,
};
use crate::density::{trace_normalize, DensityMatrix};
use crate::error::{Error, Result};
use crate::generators::{er_probability, gen_er};
use crate::graph::Graph;
use crate::incidence::{EdgeSelection, IncidenceMatrix};
use crate::measures::{qjs_divergence, von_neumann_entropy};
use crate::optimizer::{harden, sparsify_pri, HardenMode, PriConfig};
use crate::seed::{self, stream};

/// Names a [`CurvePoint`] may carry.
pub const METRICS: [&str; 9] = [
    "entropy",
    "divergence",
    "spectral_distance",
    "infinite_distance_fraction",
    "centralization",
    "retained_edges",
    "nonnegative_percent",
    "nonnegative_percent_absent",
    "decrease_fraction",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub x: f64,
    pub metrics: BTreeMap<String, Summary>,
}

impl CurvePoint {
    pub fn new(x: f64) -> Self {
        Self {
            x,
            metrics: BTreeMap::new(),
        }
    }

    /// Records the summary of `values` under `name`; empty inputs are skipped.
    pub fn record(&mut self, name: &str, values: &[f64]) {
        assert!(METRICS.contains(&name), "unregistered metric {name}");
        if let Some(s) = Summary::of(values) {
            self.metrics.insert(name.to_string(), s);
        }
    }

    pub fn mean(&self, name: &str) -> Option<f64> {
        self.metrics.get(name).map(|s| s.mean)
    }
}

/// One labelled series of grid points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Curve {
    pub series: String,
    pub points: Vec<CurvePoint>,
}

/// Mean over grid points of the per-point mean of `metric`; `None` when any
/// point lacks it.
pub fn curve_average(curve: &Curve, metric: &str) -> Option<f64> {
    let means: Option<Vec<f64>> = curve.points.iter().map(|p| p.mean(metric)).collect();
    let means = means?;
    (!means.is_empty()).then(|| means.iter().sum::<f64>() / means.len() as f64)
}

fn density_of(l: &DMatrix<f64>) -> Result<DensityMatrix> {
    trace_normalize(l)
}

fn check_ratios(ratios: &[f64]) -> Result<()> {
    if ratios.is_empty() || ratios.iter().any(|&r| !(r > 0.0 && r <= 1.0)) {
        return Err(Error::InvalidParameter(
            "ratios must be non-empty and lie in (0, 1]".into(),
        ));
    }
    Ok(())
}

fn grid_seed(root: u64, stream: u64, point: usize, replicate: usize) -> u64 {
    seed::derive(root, stream, ((point as u64) << 32) | replicate as u64)
}

/// Entropy of the subgraph and its divergence from the input under random
/// sparsification at each kept-edge ratio.
pub fn tradeoff_curve(g: &Graph, ratios: &[f64], replicates: usize, seed: u64) -> Result<Curve> {
    check_ratios(ratios)?;
    let b = IncidenceMatrix::from_graph(g);
    let rho = density_of(&b.laplacian())?;
    let s_rho = von_neumann_entropy(&rho)?;
    let mut points = Vec::with_capacity(ratios.len());
    for (i, &ratio) in ratios.iter().enumerate() {
        let mut entropy = Vec::with_capacity(replicates);
        let mut divergence = Vec::with_capacity(replicates);
        for r in 0..replicates {
            let mask = random_sparsifier(g, ratio, grid_seed(seed, stream::TRADEOFF, i, r))?;
            let sigma = density_of(&b.weighted_laplacian(mask.as_slice()))?;
            let s_sigma = von_neumann_entropy(&sigma)?;
            let s_mix = von_neumann_entropy(&sigma.mixture(&rho)?)?;
            entropy.push(s_sigma);
            // qjs_divergence without recomputing S(rho)
            divergence.push((s_mix - 0.5 * s_sigma - 0.5 * s_rho).max(0.0));
        }
        let mut p = CurvePoint::new(ratio);
        p.record("entropy", &entropy);
        p.record("divergence", &divergence);
        points.push(p);
    }
    Ok(Curve {
        series: "random".into(),
        points,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BetaCurve {
    pub curve: Curve,
    /// Spearman correlation between the grid and the mean retained count.
    pub spearman: f64,
}

/// Mean retained edge count of the relevant-information sparsifier per
/// `beta`. Replicate `r` uses the same optimizer seed at every grid point.
pub fn beta_sparsity_curve(
    g: &Graph,
    beta_grid: &[f64],
    replicates: usize,
    cfg: &PriConfig,
) -> Result<BetaCurve> {
    if beta_grid.is_empty() || beta_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter(
            "beta grid must be non-empty and sorted ascending".into(),
        ));
    }
    if replicates == 0 {
        return Err(Error::InvalidParameter(
            "replicates must be at least 1".into(),
        ));
    }
    let mut points = Vec::with_capacity(beta_grid.len());
    for &beta in beta_grid {
        let mut kept = Vec::with_capacity(replicates);
        for r in 0..replicates {
            let run = PriConfig {
                beta,
                seed: seed::derive(cfg.seed, stream::BETA_CURVE, r as u64),
                ..cfg.clone()
            };
            kept.push(sparsify_pri(g, &run)?.retained_edge_count as f64);
        }
        let mut p = CurvePoint::new(beta);
        p.record("retained_edges", &kept);
        points.push(p);
    }
    let means: Vec<f64> = points
        .iter()
        .map(|p| p.mean("retained_edges").unwrap_or(f64::NAN))
        .collect();
    Ok(BetaCurve {
        spearman: spearman(beta_grid, &means),
        curve: Curve {
            series: "pri".into(),
            points,
        },
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssumptionRow {
    pub target_degree: f64,
    /// Mean degree actually realized over the graphs used.
    pub mean_degree: f64,
    /// Percentage of node pairs whose edge addition does not lower the
    /// entropy, averaged over graphs. Every pair is tried; adding an edge
    /// that already exists leaves the simple graph unchanged and counts as a
    /// zero change. `None` when no graph had both an edge and an absent pair.
    pub percent: Option<Summary>,
    /// Same percentage over absent pairs only.
    pub percent_absent: Option<Summary>,
    pub graphs_used: usize,
    pub flagged: bool,
}

/// Changes of the entropy below this magnitude count as no change.
pub const ENTROPY_TIE: f64 = 1e-12;

/// Entropy change for every absent pair of `g` (in `absent_pairs` order).
pub fn entropy_changes(g: &Graph) -> Result<Vec<f64>> {
    let l = g.laplacian();
    let base = von_neumann_entropy(&density_of(&l)?)?;
    let mut out = Vec::new();
    let mut next = l.clone();
    for (u, v) in g.absent_pairs() {
        next.copy_from(&l);
        next[(u, u)] += 1.0;
        next[(v, v)] += 1.0;
        next[(u, v)] -= 1.0;
        next[(v, u)] -= 1.0;
        out.push(von_neumann_entropy(&density_of(&next)?)? - base);
    }
    Ok(out)
}

/// For ER graphs on `n` nodes at each target mean degree, the share of
/// single-edge additions that keep the entropy from falling.
pub fn assumption_check(
    n: usize,
    target_mean_degrees: &[f64],
    replicates: usize,
    seed: u64,
) -> Result<Vec<AssumptionRow>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    let pairs = (n * (n - 1) / 2) as f64;
    let mut rows = Vec::with_capacity(target_mean_degrees.len());
    for (i, &d) in target_mean_degrees.iter().enumerate() {
        let p = er_probability(n, d);
        let mut all = Vec::with_capacity(replicates);
        let mut absent = Vec::with_capacity(replicates);
        let mut degrees = Vec::with_capacity(replicates);
        for r in 0..replicates {
            let g = gen_er(n, p, grid_seed(seed, stream::ASSUMPTION, i, r))?;
            if g.is_empty() {
                continue;
            }
            let deltas = entropy_changes(&g)?;
            if deltas.is_empty() {
                continue;
            }
            let ok = deltas.iter().filter(|&&x| x >= -ENTROPY_TIE).count();
            all.push(100.0 * (ok + g.edge_count()) as f64 / pairs);
            absent.push(100.0 * ok as f64 / deltas.len() as f64);
            degrees.push(2.0 * g.edge_count() as f64 / n as f64);
        }
        let percent = Summary::of(&all);
        rows.push(AssumptionRow {
            target_degree: d,
            mean_degree: Summary::of(&degrees).map_or(f64::NAN, |s| s.mean),
            flagged: percent.is_none(),
            percent,
            percent_absent: Summary::of(&absent),
            graphs_used: all.len(),
        });
    }
    Ok(rows)
}

pub fn assumption_curve(rows: &[AssumptionRow]) -> Curve {
    Curve {
        series: "er".into(),
        points: rows
            .iter()
            .map(|row| {
                let mut p = CurvePoint::new(row.target_degree);
                if let Some(s) = row.percent {
                    p.metrics.insert("nonnegative_percent".into(), s);
                }
                if let Some(s) = row.percent_absent {
                    p.metrics.insert("nonnegative_percent_absent".into(), s);
                }
                p
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorollaryResult {
    /// Share of trials where re-adding one removed edge did not raise the
    /// divergence.
    pub fraction: f64,
    /// Same share restricted to trials where the entropy did not fall.
    pub fraction_given_entropy_rise: Option<f64>,
    pub trials: usize,
    pub removed_edges: usize,
    /// Divergence after re-adding every removed edge.
    pub full_recovery_divergence: f64,
}

/// Randomly sparsifies `g` to `ratio`, then re-adds single removed edges
/// drawn uniformly and checks whether the divergence from `g` drops.
pub fn corollary_check(g: &Graph, ratio: f64, trials: usize, seed: u64) -> Result<CorollaryResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "corollary check needs a connected graph".into(),
        ));
    }
    let b = IncidenceMatrix::from_graph(g);
    let rho = density_of(&b.laplacian())?;
    let mask = random_sparsifier(g, ratio, seed::derive(seed, stream::COROLLARY, 0))?;
    let removed: Vec<usize> = (0..g.edge_count())
        .filter(|&k| mask.as_slice()[k] == 0.0)
        .collect();
    if removed.is_empty() {
        return Err(Error::InvalidParameter(
            "ratio keeps every edge; nothing to re-add".into(),
        ));
    }
    let sigma = density_of(&b.weighted_laplacian(mask.as_slice()))?;
    let base_qjs = qjs_divergence(&sigma, &rho)?;
    let base_s = von_neumann_entropy(&sigma)?;
    let mut rng = seed::split_rng(seed, stream::COROLLARY, 1);
    let mut w = mask.into_inner();
    let mut decreased = 0usize;
    let mut rises = 0usize;
    let mut decreased_on_rise = 0usize;
    for _ in 0..trials {
        let k = removed[rng.gen_range(0..removed.len())];
        w[k] = 1.0;
        let next = density_of(&b.weighted_laplacian(&w))?;
        w[k] = 0.0;
        let down = qjs_divergence(&next, &rho)? <= base_qjs;
        if down {
            decreased += 1;
        }
        if von_neumann_entropy(&next)? >= base_s - ENTROPY_TIE {
            rises += 1;
            if down {
                decreased_on_rise += 1;
            }
        }
    }
    for &k in &removed {
        w[k] = 1.0;
    }
    let full = density_of(&b.weighted_laplacian(&w))?;
    Ok(CorollaryResult {
        fraction: decreased as f64 / trials.max(1) as f64,
        fraction_given_entropy_rise: (rises > 0).then(|| decreased_on_rise as f64 / rises as f64),
        trials,
        removed_edges: removed.len(),
        full_recovery_divergence: qjs_divergence(&full, &rho)?,
    })
}

/// Methods accepted by [`sparsifier_comparison`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonMethod {
    Pri,
    Baseline(SparsifierMethod),
}

impl ComparisonMethod {
    pub fn name(self) -> &'static str {
        match self {
            ComparisonMethod::Pri => "pri",
            ComparisonMethod::Baseline(m) => m.name(),
        }
    }

    pub fn all() -> Vec<ComparisonMethod> {
        std::iter::once(ComparisonMethod::Pri)
            .chain(
                SparsifierMethod::ALL
                    .into_iter()
                    .map(ComparisonMethod::Baseline),
            )
            .collect()
    }
}

/// Local-degree exponent whose mask size is closest to `k` (ties to the
/// smaller exponent), found by bisection since the size grows with the
/// exponent.
pub fn local_degree_for_count(g: &Graph, k: usize) -> Result<EdgeSelection> {
    let count = |e: f64| -> Result<(usize, EdgeSelection)> {
        let s = local_degree(g, e)?;
        Ok((s.support_size(), s))
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    let (c_lo, s_lo) = count(lo)?;
    if c_lo >= k {
        return Ok(s_lo);
    }
    let mut best = (k - c_lo, s_lo);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        let (c, s) = count(mid)?;
        let gap = c.abs_diff(k);
        if gap < best.0 {
            best = (gap, s);
        }
        if c < k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (c_hi, s_hi) = count(hi)?;
    if c_hi.abs_diff(k) < best.0 {
        best = (c_hi.abs_diff(k), s_hi);
    }
    Ok(best.1)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Comparison {
    pub curves: Vec<Curve>,
    pub warnings: Vec<String>,
}

/// Spectral distance along the input's Fiedler vector and degree
/// centralization per method and kept-edge ratio.
///
/// The relevant-information sparsifier is trained once per replicate and
/// per trade-off weight in `pri_betas` (just `pri_cfg.beta` when empty).
/// Since the weight is what controls its sparsity, each ratio uses the
/// weight whose own hardened mask size is closest to the target and keeps
/// the edges with the highest learned keep probability under it. Local
/// degree uses the exponent whose mask size is closest to the target.
/// Deterministic methods run once per ratio.
pub fn sparsifier_comparison(
    g: &Graph,
    methods: &[ComparisonMethod],
    ratios: &[f64],
    replicates: usize,
    pri_cfg: &PriConfig,
    pri_betas: &[f64],
    seed: u64,
) -> Result<Comparison> {
    check_ratios(ratios)?;
    let rho = g.laplacian();
    let x = fiedler_vector(&rho)?;
    let m = g.edge_count();
    let mut curves = Vec::new();
    let mut warnings = Vec::new();

    let betas = if pri_betas.is_empty() {
        vec![pri_cfg.beta]
    } else {
        pri_betas.to_vec()
    };
    // Per replicate: (natural mask size, keep probabilities) for every weight.
    let pri_runs: Vec<Vec<(usize, Vec<f64>)>> = if methods.contains(&ComparisonMethod::Pri) {
        (0..replicates)
            .map(|r| {
                betas
                    .iter()
                    .map(|&beta| {
                        let cfg = PriConfig {
                            beta,
                            seed: seed::derive(seed, stream::COMPARISON, r as u64),
                            ..pri_cfg.clone()
                        };
                        sparsify_pri(g, &cfg)
                            .map(|rep| (rep.selection.support_size(), rep.soft_selection))
                    })
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };

    for &method in methods {
        if method == ComparisonMethod::Baseline(SparsifierMethod::EffectiveResistance)
            && !g.is_connected()
        {
            warnings.push("effective resistance skipped: graph is disconnected".into());
            continue;
        }
        let mut points = Vec::with_capacity(ratios.len());
        for (i, &ratio) in ratios.iter().enumerate() {
            let k = target_count(ratio, m);
            let masks: Vec<EdgeSelection> = match method {
                ComparisonMethod::Pri => pri_runs
                    .iter()
                    .map(|runs| {
                        let (_, p) = runs
                            .iter()
                            .min_by_key(|(size, _)| size.abs_diff(k))
                            .expect("at least one weight");
                        harden(&EdgeSelection::new(p.clone())?, HardenMode::TopK(k))
                    })
                    .collect::<Result<_>>()?,
                ComparisonMethod::Baseline(SparsifierMethod::Random) => (0..replicates)
                    .map(|r| random_sparsifier(g, ratio, grid_seed(seed, stream::COMPARISON, i, r)))
                    .collect::<Result<_>>()?,
                ComparisonMethod::Baseline(SparsifierMethod::EffectiveResistance) => (0
                    ..replicates)
                    .map(|r| {
                        effective_resistance_sparsifier(
                            g,
                            ratio,
                            grid_seed(seed, stream::COMPARISON, i, r),
                        )
                    })
                    .collect::<Result<_>>()?,
                ComparisonMethod::Baseline(SparsifierMethod::LocalDegree) => {
                    vec![local_degree_for_count(g, k)?]
                }
                ComparisonMethod::Baseline(SparsifierMethod::LocalSimilarity) => {
                    vec![local_similarity(g, ratio)?]
                }
            };
            let mut finite = Vec::new();
            let mut infinite = Vec::new();
            let mut central = Vec::new();
            let mut kept = Vec::new();
            for mask in &masks {
                let sub = g.subgraph(mask.as_slice())?;
                let d = spectral_distance(&rho, &sub.laplacian(), &x)?;
                infinite.push(if d.is_finite() { 0.0 } else { 1.0 });
                if d.is_finite() {
                    finite.push(d);
                }
                central.push(centralization(&sub)?);
                kept.push(mask.support_size() as f64);
            }
            let mut p = CurvePoint::new(ratio);
            p.record("spectral_distance", &finite);
            p.record("infinite_distance_fraction", &infinite);
            p.record("centralization", &central);
            p.record("retained_edges", &kept);
            points.push(p);
        }
        curves.push(Curve {
            series: method.name().into(),
            points,
        });
    }
    Ok(Comparison { curves, warnings })
}
