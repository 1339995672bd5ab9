//! Predicted side: closed forms for the critical radius, numerical
//! evaluation of the integral it is built from, and the comparison of
//! radii across regions of equal area.

mod formulas;
mod quadrature;
mod report;

pub use formulas::{
    boundary_coefficient, boundary_target, limit_probability, predicted_radius, xi, xi_for,
    PredictionInput, MIN_PERIMETER,
};
pub use quadrature::{
    adaptive_simpson, edge_strip_integral, integral_lhs, IntegralBreakdown, QuadratureSpec,
};
pub use report::{disk_minimality_report, MinimalityReport, MinimalityRow};
