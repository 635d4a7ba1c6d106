//! Fast self-check of the numerical invariants, run by `graph-pri verify`.
//!
//! The divergence under test is injectable so that a deliberately broken
//! implementation can be shown to trip the checks.

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::baselines::effective_resistances;
use crate::density::{trace_normalize, DensityMatrix};
use crate::error::Result;
use crate::generators::gen_er;
use crate::graph::{Edge, Graph};
use crate::incidence::{EdgeSelection, IncidenceMatrix};
use crate::measures::{
    entropy_gap_bound, graph_entropy, pri_objective, qjs_divergence, von_neumann_entropy,
};
use crate::optimizer::objective::analytical_gradient;
use crate::seed::{self, stream};

pub type QjsFn = fn(&DensityMatrix, &DensityMatrix) -> Result<f64>;

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed violation or the reason for failure.
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random cases per property.
    pub cases: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            cases: 200,
        }
    }
}

/// Gaussian `A A^T` scaled to unit trace, rank `rank`.
pub fn random_density(rng: &mut ChaCha8Rng, n: usize, rank: usize) -> DensityMatrix {
    let a = DMatrix::<f64>::from_fn(n, rank, |_, _| rng.sample(StandardNormal));
    trace_normalize(&(&a * a.transpose())).expect("Gaussian product has positive trace")
}

/// ER graph on `n` nodes with weights drawn from `[0.5, 2)` when `weighted`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, weighted: bool) -> Graph {
    let g = gen_er(n, p, rng.gen()).expect("valid ER parameters");
    if !weighted {
        return g;
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge::new(e.u, e.v, rng.gen_range(0.5..2.0)))
        .collect();
    Graph::new(n, edges).expect("reweighting keeps a valid graph")
}

/// Uniform random point of the open box, kept away from the faces.
fn interior_point(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    (0..m).map(|_| rng.gen_range(0.05..0.95)).collect()
}

/// Unit direction with zero coordinate sum.
fn tangent_direction(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    let mut d: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
    let mean = d.iter().sum::<f64>() / m as f64;
    d.iter_mut().for_each(|x| *x -= mean);
    let norm = d.iter().map(|x| x * x).sum::<f64>().sqrt();
    d.iter_mut().for_each(|x| *x /= norm);
    d
}

struct Check {
    name: &'static str,
    worst: f64,
    tolerance: f64,
    error: Option<String>,
}

impl Check {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            worst: 0.0,
            tolerance,
            error: None,
        }
    }

    fn observe(&mut self, violation: f64) {
        if !(violation <= self.worst) {
            self.worst = violation;
        }
    }

    fn fail(&mut self, e: impl std::fmt::Display) {
        self.error.get_or_insert_with(|| e.to_string());
    }

    fn finish(self) -> PropertyResult {
        let passed = self.error.is_none() && self.worst <= self.tolerance;
        let detail = match self.error {
            Some(e) => e,
            None => format!(
                "worst {:.3e} (tolerance {:.0e})",
                self.worst, self.tolerance
            ),
        };
        PropertyResult {
            name: self.name,
            passed,
            detail,
        }
    }
}

fn incidence_oracle(rng: &mut ChaCha8Rng, cases: usize) -> PropertyResult {
    let mut c = Check::new("incidence_laplacian_oracle", 1e-12);
    for _ in 0..cases {
        let n = rng.gen_range(2..=50);
        let p = rng.gen_range(0.05..0.6);
        let g = random_graph(rng, n, p, true);
        let mask: Vec<f64> = (0..g.edge_count())
            .map(|_| if rng.gen_bool(0.5) { 1.0 } else { 0.0 })
            .collect();
        let b = IncidenceMatrix::from_graph(&g);
        let rebuilt = g.subgraph(&mask).map(|s| s.laplacian());
        match rebuilt {
            Ok(l) => c.observe((b.weighted_laplacian(&mask) - l).amax()),
            Err(e) => c.fail(e),
        }
    }
    c.finish()
}

fn entropy_complete(_: &mut ChaCha8Rng, _: usize) -> PropertyResult {
    let mut c = Check::new("entropy_complete_graph", 1e-9);
    for n in 3..=20usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        match Graph::from_pairs(n, &pairs).and_then(|g| graph_entropy(&g)) {
            Ok(s) => c.observe((s - ((n - 1) as f64).ln()).abs()),
            Err(e) => c.fail(e),
        }
    }
    match Graph::from_pairs(2, &[(0, 1)]).and_then(|g| graph_entropy(&g)) {
        Ok(s) => c.observe(s.abs()),
        Err(e) => c.fail(e),
    }
    c.finish()
}

fn entropy_bounds(rng: &mut ChaCha8Rng, cases: usize) -> PropertyResult {
    let mut c = Check::new("entropy_bounds", 1e-12);
    for _ in 0..cases {
        let n = rng.gen_range(1..=12);
        let rank = rng.gen_range(1..=n);
        let d = random_density(rng, n, rank);
        match von_neumann_entropy(&d) {
            Ok(s) => c.observe((-s).max(s - (n as f64).ln())),
            Err(e) => c.fail(e),
        }
    }
    c.finish()
}

fn density_triple(rng: &mut ChaCha8Rng) -> [DensityMatrix; 3] {
    let n = rng.gen_range(2..=8);
    let draw = |rng: &mut ChaCha8Rng| {
        let rank = rng.gen_range(1..=n);
        random_density(rng, n, rank)
    };
    [draw(rng), draw(rng), draw(rng)]
}

fn qjs_axioms(rng: &mut ChaCha8Rng, cases: usize, qjs: QjsFn) -> Vec<PropertyResult> {
    let tol = 1e-8;
    let mut nonneg = Check::new("qjs_nonnegative", 0.0);
    let mut symmetric = Check::new("qjs_symmetric", tol);
    let mut bounded = Check::new("qjs_at_most_ln2", tol);
    let mut identity = Check::new("qjs_zero_on_equal", tol);
    let mut triangle = Check::new("qjs_sqrt_triangle", tol);
    for _ in 0..cases {
        let [a, b, c] = density_triple(rng);
        let pairs = (|| -> Result<[f64; 5]> {
            Ok([
                qjs(&a, &b)?,
                qjs(&b, &a)?,
                qjs(&a, &a)?,
                qjs(&b, &c)?,
                qjs(&a, &c)?,
            ])
        })();
        let [ab, ba, aa, bc, ac] = match pairs {
            Ok(v) => v,
            Err(e) => {
                symmetric.fail(e);
                continue;
            }
        };
        nonneg.observe(-ab.min(ba).min(aa).min(bc).min(ac));
        symmetric.observe((ab - ba).abs());
        bounded.observe(ab.max(bc).max(ac) - std::f64::consts::LN_2);
        identity.observe(aa.abs());
        let (ab, bc, ac) = (ab.max(0.0).sqrt(), bc.max(0.0).sqrt(), ac.max(0.0).sqrt());
        triangle.observe(ac - ab - bc);
        triangle.observe(ab - ac - bc);
        triangle.observe(bc - ab - ac);
    }
    let mut distinct = Check::new("qjs_positive_on_distinct", 0.0);
    for _ in 0..cases.min(50) {
        let [a, b, _] = density_triple(rng);
        match qjs(&a, &b) {
            Ok(d) if d > 0.0 => {}
            Ok(d) => distinct.fail(format!("qjs = {d} on distinct matrices")),
            Err(e) => distinct.fail(e),
        }
    }
    vec![
        nonneg.finish(),
        symmetric.finish(),
        bounded.finish(),
        identity.finish(),
        distinct.finish(),
        triangle.finish(),
    ]
}

fn objective_at(b: &IncidenceMatrix, rho: &DensityMatrix, w: &[f64], beta: f64) -> Result<f64> {
    let sigma = trace_normalize(&b.weighted_laplacian(w))?;
    pri_objective(&sigma, rho, beta)
}

/// Directional derivatives along zero-sum directions against central
/// differences, and the derivative along `w` itself, which vanishes because
/// the trace normalization makes the objective scale invariant.
fn gradient_checks(rng: &mut ChaCha8Rng, cases: usize) -> Vec<PropertyResult> {
    let h = 1e-6;
    let mut tangent = Check::new("gradient_tangent_finite_difference", 1e-4);
    let mut radial = Check::new("gradient_radial_derivative", 1e-8);
    let mut done = 0;
    while done < cases {
        let weighted = rng.gen_bool(0.5);
        let g = random_graph(rng, 10, 0.4, weighted);
        if g.edge_count() < 2 {
            continue;
        }
        done += 1;
        let beta = [0.0, 0.5, 1.0, 5.0][rng.gen_range(0..4)];
        let b = IncidenceMatrix::from_graph(&g);
        let rho = match trace_normalize(&b.laplacian()) {
            Ok(r) => r,
            Err(e) => {
                tangent.fail(e);
                continue;
            }
        };
        let w = interior_point(rng, g.edge_count());
        let d = tangent_direction(rng, g.edge_count());
        let step = |s: f64| -> Vec<f64> { w.iter().zip(&d).map(|(x, y)| x + s * y).collect() };
        let outcome = (|| -> Result<(f64, f64, f64)> {
            let grad = analytical_gradient(&b, &EdgeSelection::new(w.clone())?, beta)?;
            let analytic: f64 = grad.iter().zip(&d).map(|(a, b)| a * b).sum();
            let fd = (objective_at(&b, &rho, &step(h), beta)?
                - objective_at(&b, &rho, &step(-h), beta)?)
                / (2.0 * h);
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            let along_w: f64 = grad.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>() / norm;
            Ok((analytic, fd, along_w))
        })();
        match outcome {
            Ok((analytic, fd, along_w)) => {
                // Central differences carry about 1e-10 of rounding noise here.
                tangent.observe((analytic - fd).abs() / (analytic.abs().max(fd.abs()) + 1e-6));
                radial.observe(along_w.abs());
            }
            Err(e) => tangent.fail(e),
        }
    }
    vec![tangent.finish(), radial.finish()]
}

fn gap_bound(rng: &mut ChaCha8Rng, cases: usize) -> PropertyResult {
    let mut c = Check::new("degree_entropy_gap_bound", 1e-10);
    let mut done = 0;
    while done < cases {
        let n = rng.gen_range(5..=30);
        let p = rng.gen_range(0.15..0.8);
        let g = random_graph(rng, n, p, true);
        if g.is_empty() {
            continue;
        }
        done += 1;
        match entropy_gap_bound(&g) {
            Ok(gap) => c.observe((-gap.gap).max(gap.gap - gap.upper_bound)),
            Err(e) => c.fail(e),
        }
    }
    c.finish()
}

fn foster(rng: &mut ChaCha8Rng, cases: usize) -> PropertyResult {
    let mut c = Check::new("foster_identity", 1e-8);
    let mut done = 0;
    while done < cases {
        let n = rng.gen_range(3..=30);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(rng, n, p, true);
        if !g.is_connected() {
            continue;
        }
        done += 1;
        match effective_resistances(&g) {
            Ok(r) => {
                let sum: f64 = g.edges().iter().zip(&r).map(|(e, r)| e.weight * r).sum();
                c.observe((sum - (n - g.component_count()) as f64).abs());
            }
            Err(e) => c.fail(e),
        }
    }
    c.finish()
}

/// Runs every property with the library divergence.
pub fn run(opts: VerifyOptions) -> Vec<PropertyResult> {
    run_with_qjs(opts, qjs_divergence)
}

/// Runs every property, checking the divergence axioms against `qjs`.
pub fn run_with_qjs(opts: VerifyOptions, qjs: QjsFn) -> Vec<PropertyResult> {
    let mut rng = seed::split_rng(opts.seed, stream::VERIFY, 0);
    let n = opts.cases;
    let mut out = vec![
        incidence_oracle(&mut rng, n.min(50)),
        entropy_complete(&mut rng, n),
        entropy_bounds(&mut rng, n),
    ];
    out.extend(qjs_axioms(&mut rng, n, qjs));
    out.extend(gradient_checks(&mut rng, n.min(50)));
    out.push(gap_bound(&mut rng, n.min(100)));
    out.push(foster(&mut rng, n.min(50)));
    out
}
