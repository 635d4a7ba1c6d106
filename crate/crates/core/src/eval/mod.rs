pub mod harness;
pub mod metrics;
pub mod report;
pub mod stats;

pub use harness::{
    assumption_check, beta_sparsity_curve, corollary_check, curve_average, sparsifier_comparison,
    tradeoff_curve, ComparisonMethod, Curve, CurvePoint,
};
pub use metrics::{centralization, fiedler_vector, spectral_distance};
pub use report::{HarnessReport, Provenance};
pub use stats::{spearman, Summary};
