use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::incidence::EdgeSelection;

/// Deterministic rule for turning a soft selection into a hard one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HardenMode {
    /// Keep every edge with `w_m >= t`.
    Threshold(f64),
    /// Keep the `K` largest entries; ties go to the lower edge index.
    TopK(usize),
}

pub fn harden(w: &EdgeSelection, mode: HardenMode) -> Result<EdgeSelection> {
    let values = w.as_slice();
    match mode {
        HardenMode::Threshold(t) => {
            if !t.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "threshold must be finite, got {t}"
                )));
            }
            let mask: Vec<bool> = values.iter().map(|&x| x >= t).collect();
            Ok(EdgeSelection::from_bools(&mask))
        }
        HardenMode::TopK(k) => {
            if k > values.len() {
                return Err(Error::InvalidParameter(format!(
                    "top_k {k} exceeds edge count {}",
                    values.len()
                )));
            }
            let mut order: Vec<usize> = (0..values.len()).collect();
            // stable sort keeps lower indices first among equal values
            order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
            Ok(EdgeSelection::from_indices(values.len(), &order[..k]))
        }
    }
}
