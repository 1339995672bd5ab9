//! Predicted radius across regions of equal area.

use serde::{Deserialize, Serialize};

use super::formulas::{predicted_radius, PredictionInput};
use crate::error::{domain, Result};
use crate::geometry::ConvexRegion;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimalityRow {
    pub region: String,
    pub perimeter: f64,
    pub is_disk: bool,
    pub predicted_radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub n: f64,
    pub k: usize,
    pub c: f64,
    pub rows: Vec<MinimalityRow>,
}

impl MinimalityReport {
    /// Rows sorted by perimeter have strictly increasing radii, up to ties in
    /// perimeter.
    pub fn increasing_with_perimeter(&self) -> bool {
        let mut rows: Vec<&MinimalityRow> = self.rows.iter().collect();
        rows.sort_by(|a, b| a.perimeter.total_cmp(&b.perimeter));
        rows.windows(2).all(|w| {
            if w[0].perimeter == w[1].perimeter {
                w[0].predicted_radius == w[1].predicted_radius
            } else {
                w[0].predicted_radius < w[1].predicted_radius
            }
        })
    }
}

/// Predicted radius for each unit-area region. For `k >= 1` every disk row
/// must come out strictly below every other row, or this returns an error.
pub fn disk_minimality_report(
    regions: &[ConvexRegion],
    n: f64,
    k: usize,
    c: f64,
) -> Result<MinimalityReport> {
    let mut rows = Vec::with_capacity(regions.len());
    for region in regions {
        if (region.area() - 1.0).abs() > 1e-9 {
            return domain(format!(
                "region {} has area {}, expected 1",
                region.label(),
                region.area()
            ));
        }
        let l = region.perimeter();
        rows.push(MinimalityRow {
            region: region.label().to_string(),
            perimeter: l,
            is_disk: region.is_disk(),
            predicted_radius: predicted_radius(&PredictionInput::new(n, k, c, l))?,
        });
    }
    if k >= 1 {
        let disks = rows.iter().filter(|r| r.is_disk);
        let worst_disk = disks
            .map(|r| r.predicted_radius)
            .fold(f64::NEG_INFINITY, f64::max);
        let best_other = rows
            .iter()
            .filter(|r| !r.is_disk)
            .map(|r| r.predicted_radius)
            .fold(f64::INFINITY, f64::min);
        if worst_disk >= best_other {
            return domain(format!(
                "disk radius {worst_disk} is not strictly below the smallest non-disk radius {best_other}"
            ));
        }
    }
    Ok(MinimalityReport { n, k, c, rows })
}
