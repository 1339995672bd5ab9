//! Numerical evaluation of `(n/k!) ∫_Ω (n|B(x,r)∩Ω|)^k e^{-n|B(x,r)∩Ω|} dx`
//! and its one-dimensional half-plane analogue.
//!
//! Points at distance `>= r` from the boundary see the full disk, so the
//! integrand there is the constant `ψ(nπr²)` and is integrated exactly. Only
//! the band near the boundary is quadratured: coarse cells that meet it are
//! split into fine cells, full fine cells use 2×2 Gauss-Legendre, and cells
//! cut by the boundary use the exact clipped area times the integrand at the
//! clipped centroid.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::formulas::ln_factorial;
use crate::error::{domain, Result};
use crate::geometry::{segment_area, ConvexRegion, Point};

/// Cell sizes as fractions of `r`, and the band width as a multiple of `r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub interior_cell: f64,
    pub band_cell: f64,
    pub band_width: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            interior_cell: 0.25,
            band_cell: 1.0 / 16.0,
            band_width: 2.0,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = self.band_cell > 0.0
            && self.band_cell <= self.interior_cell
            && self.interior_cell.is_finite()
            && self.band_width >= 1.0
            && self.band_width.is_finite();
        if !ok {
            return domain(format!(
                "quadrature spec needs 0 < band_cell <= interior_cell and band_width >= 1, got {self:?}"
            ));
        }
        Ok(())
    }

    /// Both cell sizes halved.
    pub fn refined(&self) -> Self {
        Self {
            interior_cell: self.interior_cell / 2.0,
            band_cell: self.band_cell / 2.0,
            band_width: self.band_width,
        }
    }
}

/// The integral split into the part from `{dist(x, ∂Ω) >= r}` and the rest.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegralBreakdown {
    pub total: f64,
    pub interior: f64,
    pub boundary_band: f64,
}

/// Cap on the number of cells one evaluation may touch.
const MAX_CELLS: f64 = 5e7;

/// `(1/k!) m^k e^{-m}` times `n`, in log space.
#[derive(Clone, Copy)]
struct Psi {
    ln_n: f64,
    k: f64,
    ln_kfact: f64,
    n: f64,
}

impl Psi {
    fn new(n: f64, k: usize) -> Self {
        Self {
            ln_n: n.ln(),
            k: k as f64,
            ln_kfact: ln_factorial(k),
            n,
        }
    }

    fn at(&self, m: f64) -> f64 {
        if m <= 0.0 {
            return if self.k == 0.0 { self.n } else { 0.0 };
        }
        (self.ln_n + self.k * m.ln() - m - self.ln_kfact).exp()
    }
}

pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 8 {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

fn square(lo: Point, h: f64) -> [Point; 4] {
    [
        lo,
        Point::new(lo.x + h, lo.y),
        Point::new(lo.x + h, lo.y + h),
        Point::new(lo.x, lo.y + h),
    ]
}

/// Evaluates the integral for `region` at intensity `n` and radius `r`.
pub fn integral_lhs(
    region: &ConvexRegion,
    n: f64,
    r: f64,
    k: usize,
    quad: &QuadratureSpec,
) -> Result<IntegralBreakdown> {
    quad.validate()?;
    if !(n >= 1.0) || !n.is_finite() {
        return domain(format!("n must be >= 1, got {n}"));
    }
    if !(r > 0.0) || !r.is_finite() {
        return domain(format!("r must be positive, got {r}"));
    }
    let diam = region.diameter_bound();
    if r >= diam {
        return domain(format!(
            "r = {r} is not small against the region (diameter bound {diam})"
        ));
    }
    let (lo, hi) = region.bounding_box();
    let big = quad.interior_cell * r;
    let nx = ((hi.x - lo.x) / big).ceil().max(1.0);
    let ny = ((hi.y - lo.y) / big).ceil().max(1.0);
    let split = (quad.interior_cell / quad.band_cell).ceil();
    let band_cells =
        region.perimeter() * (quad.band_width * r + 2.0 * big) / (big * big) * split * split;
    if nx * ny + band_cells > MAX_CELLS {
        return domain(format!(
            "quadrature would need about {:.0} cells; r = {r} is too small for these cell sizes",
            nx * ny + band_cells
        ));
    }
    let (nx, ny, split) = (nx as usize, ny as usize, split as usize);
    let fine = big / split as f64;
    let psi = Psi::new(n, k);
    let band = quad.band_width * r;
    // 2-point Gauss-Legendre offsets within a fine cell
    let g = fine * (0.5 - 0.5 / 3f64.sqrt());
    let gauss = [(g, g), (fine - g, g), (g, fine - g), (fine - g, fine - g)];

    let fine_cell = |corner: Point| -> (f64, f64) {
        let cell = square(corner, fine);
        if cell.iter().all(|&p| region.contains(p)) {
            let s: f64 = gauss
                .iter()
                .map(|&(dx, dy)| {
                    let x = Point::new(corner.x + dx, corner.y + dy);
                    psi.at(n * region.ball_area_unchecked(x, r))
                })
                .sum();
            (s * fine * fine / 4.0, fine * fine)
        } else {
            let (a, c) = region.clip_convex(&cell);
            if a <= 0.0 {
                return (0.0, 0.0);
            }
            (a * psi.at(n * region.ball_area_unchecked(c, r)), a)
        }
    };

    let rows: Vec<(f64, f64)> = (0..ny)
        .into_par_iter()
        .map(|iy| {
            let mut sums = Vec::new();
            let mut areas = Vec::new();
            for ix in 0..nx {
                let corner = Point::new(lo.x + ix as f64 * big, lo.y + iy as f64 * big);
                let cell = square(corner, big);
                let inside = cell.iter().all(|&p| region.contains(p));
                if inside
                    && cell
                        .iter()
                        .all(|&p| region.boundary_distance_unchecked(p) >= band)
                {
                    continue;
                }
                if !inside && region.clip_convex(&cell).0 <= 0.0 {
                    continue;
                }
                for j in 0..split {
                    for i in 0..split {
                        let c = Point::new(corner.x + i as f64 * fine, corner.y + j as f64 * fine);
                        let (s, a) = fine_cell(c);
                        sums.push(s);
                        areas.push(a);
                    }
                }
            }
            (pairwise_sum(&sums), pairwise_sum(&areas))
        })
        .collect();
    let band_sum = pairwise_sum(&rows.iter().map(|r| r.0).collect::<Vec<_>>());
    let refined_area = pairwise_sum(&rows.iter().map(|r| r.1).collect::<Vec<_>>());

    let full = psi.at(n * PI * r * r);
    let total = band_sum + full * (region.area() - refined_area).max(0.0);
    let interior = full * region.inner_parallel_area(r);
    Ok(IntegralBreakdown {
        total,
        interior,
        boundary_band: total - interior,
    })
}

/// Adaptive Simpson on `[a, b]` to relative tolerance `rel_tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    const PIECES: usize = 64;
    let h = (b - a) / PIECES as f64;
    let mut pieces = Vec::with_capacity(PIECES);
    for i in 0..PIECES {
        let x0 = a + i as f64 * h;
        let x1 = if i + 1 == PIECES { b } else { x0 + h };
        let (f0, fm, f1) = (f(x0), f(0.5 * (x0 + x1)), f(x1));
        pieces.push((x0, x1, f0, fm, f1, (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1)));
    }
    let scale: f64 = pieces.iter().map(|p| p.5).sum::<f64>().abs();
    if scale == 0.0 {
        return 0.0;
    }
    let eps = rel_tol * scale / PIECES as f64;
    let parts: Vec<f64> = pieces
        .into_iter()
        .map(|(x0, x1, f0, fm, f1, s)| simpson_rec(&f, x0, x1, f0, fm, f1, s, eps, 48))
        .collect();
    pairwise_sum(&parts)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        return left + right + delta / 15.0;
    }
    simpson_rec(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
        + simpson_rec(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
}

/// `n ∫_0^{r/2} (n a(t))^k e^{-n a(t)} / k! dt`, where `a(t)` is the area of
/// the disk of radius `r` minus the cap cut off at distance `t` from its
/// center.
pub fn edge_strip_integral(n: f64, r: f64, k: usize) -> Result<f64> {
    if !(n >= 1.0) || !n.is_finite() {
        return domain(format!("n must be >= 1, got {n}"));
    }
    if !(r > 0.0) || !r.is_finite() {
        return domain(format!("r must be positive, got {r}"));
    }
    let psi = Psi::new(n, k);
    let f = |t: f64| psi.at(n * segment_area(r, t).unwrap_or(f64::NAN));
    Ok(adaptive_simpson(f, 0.0, 0.5 * r, 1e-8))
}
