//! CSV and JSON artifacts for harness output.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::harness::Curve;
use crate::error::{Error, Result};

/// What produced an artifact. Repeating a run with the same provenance
/// reproduces the artifact byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: u64,
    pub commit: String,
    pub config: serde_json::Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HarnessReport {
    pub experiment: String,
    pub provenance: Provenance,
    pub curves: Vec<Curve>,
    /// Experiment specific scalars (correlations, flags, warnings).
    #[serde(default)]
    pub extra: serde_json::Value,
}

/// Header row of every curve CSV.
pub const CSV_HEADER: &str = "x,metric,mean,std,n,seed";

/// `#` provenance lines, the header, then one row per (curve, point, metric).
/// The metric column is `series.metric`.
pub fn curves_csv(report: &HarnessReport) -> Result<String> {
    let p = &report.provenance;
    let mut out = String::new();
    let _ = writeln!(out, "# experiment: {}", report.experiment);
    let _ = writeln!(out, "# seed: {}", p.seed);
    let _ = writeln!(out, "# commit: {}", p.commit);
    let _ = writeln!(out, "# config: {}", serde_json::to_string(&p.config)?);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for curve in &report.curves {
        for point in &curve.points {
            for (name, s) in &point.metrics {
                let _ = writeln!(
                    out,
                    "{},{}.{},{},{},{},{}",
                    point.x, curve.series, name, s.mean, s.std, s.n, p.seed
                );
            }
        }
    }
    Ok(out)
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_csv(path: &Path, report: &HarnessReport) -> Result<()> {
    write(path, &curves_csv(report)?)
}

pub fn write_json(path: &Path, report: &HarnessReport) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    write(path, &text)
}
