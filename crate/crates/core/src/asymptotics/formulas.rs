//! Closed forms: ξ, the predicted radius and the limit probability.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Smallest perimeter of a unit-area convex region (the disk).
pub const MIN_PERIMETER: f64 = 3.544_907_701_811_032; // 2√π

pub(crate) fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

fn check_perimeter(l: f64) -> Result<()> {
    // a little slack so that 2√π computed in another order still passes
    if !(l >= MIN_PERIMETER * (1.0 - 1e-12)) || !l.is_finite() {
        return domain(format!(
            "perimeter {l} is below the isoperimetric bound 2√π ≈ {MIN_PERIMETER:.6} for unit area"
        ));
    }
    Ok(())
}

/// `ξ(k, l, c)` for `k >= 1` and perimeter `l`.
pub fn xi(k: usize, l: f64, c: f64) -> Result<f64> {
    if k == 0 {
        return domain("ξ is only defined for k >= 1");
    }
    check_perimeter(l)?;
    if !c.is_finite() {
        return domain(format!("c must be finite, got {c}"));
    }
    let sp = PI.sqrt();
    if k == 1 {
        // √(e^{-c} + a²) - a, written as e^{-c} / (√(e^{-c} + a²) + a) to
        // avoid cancellation for large c
        let a = l * sp / 8.0;
        let e = (-c).exp();
        let arg = e / ((e + a * a).sqrt() + a);
        Ok(-2.0 * arg.ln())
    } else {
        let lnc = (l * sp).ln() - (k as f64 + 1.0) * 2f64.ln() - ln_factorial(k);
        Ok(2.0 * lnc + 2.0 * c)
    }
}

/// Inputs of the radius prediction. `k` is the order in the events
/// `δ >= k+1` and `κ >= k+1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PredictionInput {
    pub n: f64,
    pub k: usize,
    pub c: f64,
    /// Perimeter of the unit-area region.
    pub l: f64,
}

impl PredictionInput {
    pub fn new(n: f64, k: usize, c: f64, l: f64) -> Self {
        Self { n, k, c, l }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.n >= 2.0) || !self.n.is_finite() {
            return domain(format!("n must be >= 2, got {}", self.n));
        }
        check_perimeter(self.l)?;
        if !self.c.is_finite() {
            return domain(format!("c must be finite, got {}", self.c));
        }
        if self.k >= 1 && !(self.n.ln().ln() > 0.0) {
            return domain(format!("k >= 1 needs ln ln n > 0, got n = {}", self.n));
        }
        Ok(())
    }
}

/// `ξ` for the input, or `None` when `k = 0`.
pub fn xi_for(input: &PredictionInput) -> Result<Option<f64>> {
    if input.k == 0 {
        return Ok(None);
    }
    xi(input.k, input.l, input.c).map(Some)
}

/// The radius `r_n` at which both critical-radius probabilities tend to
/// `exp(-e^{-c})`.
pub fn predicted_radius(input: &PredictionInput) -> Result<f64> {
    input.validate()?;
    let ln_n = input.n.ln();
    let radicand = match xi_for(input)? {
        None => ln_n + input.c,
        Some(xi) => ln_n + (2.0 * input.k as f64 - 1.0) * ln_n.ln() + xi,
    };
    if !(radicand > 0.0) {
        return domain(format!(
            "radius radicand is nonpositive ({radicand}) for n = {}, k = {}, c = {}",
            input.n, input.k, input.c
        ));
    }
    Ok((radicand / (PI * input.n)).sqrt())
}

/// `exp(-e^{-c})`.
pub fn limit_probability(c: f64) -> f64 {
    (-(-c).exp()).exp()
}

/// `√π / (2^{k+1} k!)`, the boundary coefficient per unit perimeter.
pub fn boundary_coefficient(k: usize) -> f64 {
    (0.5 * PI.ln() - (k as f64 + 1.0) * 2f64.ln() - ln_factorial(k)).exp()
}

/// Leading-order value of the boundary-band part of the integral:
/// `l √π / (2^{k+1} k!) e^{-ξ/2}`.
pub fn boundary_target(k: usize, l: f64, c: f64) -> Result<f64> {
    let x = xi(k, l, c)?;
    Ok(l * boundary_coefficient(k) * (-x / 2.0).exp())
}
