//! Closed-form areas of disk pieces.

use std::f64::consts::PI;

use crate::error::{domain, Result};

/// Area of `{x : |x| <= r, x_1 <= t}`: a radius-`r` disk cut by a line at
/// signed distance `t` from its center, keeping the larger side.
///
/// Ranges over `[πr²/2, πr²]` for `t` in `[0, r]`; its derivative in `t` is
/// the chord length `2√(r² − t²)`.
pub fn segment_area(r: f64, t: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return domain(format!("segment_area: radius must be positive, got {r}"));
    }
    if !(0.0..=r).contains(&t) {
        return domain(format!("segment_area: t = {t} outside [0, {r}]"));
    }
    let r2 = r * r;
    Ok(PI * r2 - r2 * (t / r).acos() + t * (r2 - t * t).sqrt())
}

fn check_lens_args(r: f64, d: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return domain(format!("shadow area: radius must be positive, got {r}"));
    }
    if !(0.0..=r).contains(&d) {
        return domain(format!("shadow area: d = {d} outside [0, {r}]"));
    }
    Ok(())
}

/// Shadow area of two radius-`r` disks whose centers are `d` apart:
///
/// `S = πr²/2 + d√(r² − d²/4) − d√(r² − d²) − r²·arccos(d / 2r)`.
pub fn lens_shadow_area_exact(r: f64, d: f64) -> Result<f64> {
    check_lens_args(r, d)?;
    let r2 = r * r;
    let s = 0.5 * PI * r2 + d * (r2 - 0.25 * d * d).sqrt()
        - d * (r2 - d * d).sqrt()
        - r2 * (d / (2.0 * r)).acos();
    Ok(s.max(0.0))
}

/// Fifth-order expansion of [`lens_shadow_area_exact`] in `u = d/r`:
/// `r²(u/2 + 19u³/48 + 153u⁵/1280)`.
pub fn lens_shadow_area_series(r: f64, d: f64) -> Result<f64> {
    check_lens_args(r, d)?;
    let u = d / r;
    let u2 = u * u;
    Ok(r * r * u * (0.5 + u2 * (19.0 / 48.0 + u2 * (153.0 / 1280.0))))
}
