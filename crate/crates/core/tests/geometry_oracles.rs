//! Exact geometry against hit-count Monte Carlo and against the shadow-area
//! bounds used by the asymptotic argument.

use std::f64::consts::PI;

use rand::Rng;
use rgg_core::geometry::{lens_shadow_area_exact, lens_shadow_area_series, segment_area};
use rgg_core::sampling::{rng_for, uniform_point};
use rgg_core::{ConvexRegion, Point};

const SAMPLES: usize = 400_000;

/// Fraction estimate `p` of a box of area `box_area`, with its standard error.
fn estimate(hits: usize, box_area: f64) -> (f64, f64) {
    let p = hits as f64 / SAMPLES as f64;
    (
        p * box_area,
        box_area * (p * (1.0 - p) / SAMPLES as f64).sqrt(),
    )
}

fn in_disk<R: Rng>(rng: &mut R, c: Point, r: f64) -> Point {
    loop {
        let x = rng.random_range(-1.0..1.0);
        let y = rng.random_range(-1.0..1.0);
        if x * x + y * y <= 1.0 {
            return Point::new(c.x + r * x, c.y + r * y);
        }
    }
}

fn regions() -> Vec<ConvexRegion> {
    vec![
        ConvexRegion::unit_square(),
        ConvexRegion::unit_disk(),
        ConvexRegion::regular_polygon(6).unwrap(),
        ConvexRegion::unit_rectangle(0.5).unwrap(),
        ConvexRegion::polygon(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(0.3, 1.0),
        ])
        .unwrap(),
    ]
}

#[test]
fn ball_intersection_matches_hit_counts() {
    let mut rng = rng_for(11, 0);
    let regions = regions();
    for case in 0..20 {
        let region = &regions[case % regions.len()];
        let center = uniform_point(region, &mut rng);
        let r = rng.random_range(0.05..0.6);
        let exact = region.ball_intersection_area(center, r).unwrap();
        let hits = (0..SAMPLES)
            .filter(|_| region.contains(in_disk(&mut rng, center, r)))
            .count();
        let (mc, se) = estimate(hits, PI * r * r);
        assert!(
            (exact - mc).abs() <= 3.0 * se.max(1e-12),
            "case {case}: exact {exact} vs {mc} ± {se}"
        );
    }
}

#[test]
fn segment_area_matches_hit_counts() {
    let mut rng = rng_for(12, 0);
    for case in 0..20 {
        let r = rng.random_range(0.1..2.0);
        let t = rng.random_range(0.0..r);
        let exact = segment_area(r, t).unwrap();
        let o = Point::new(0.0, 0.0);
        let hits = (0..SAMPLES)
            .filter(|_| in_disk(&mut rng, o, r).x <= t)
            .count();
        let (mc, se) = estimate(hits, PI * r * r);
        assert!(
            (exact - mc).abs() <= 3.0 * se,
            "case {case}: {exact} vs {mc} ± {se}"
        );
    }
}

/// Centers `A = (0,0)` and `B = (d,0)`. The shadow area equals the upper half
/// of `B \ A`, plus the triangle `A B C` with `C` the upper intersection of
/// the circles, minus the rectangle `[0,d] × [0, √(r²−d²)]`. Only the first
/// piece is curved, so it is the one estimated by hit counts.
#[test]
fn shadow_area_matches_decomposition() {
    let mut rng = rng_for(13, 0);
    for case in 0..20 {
        let r = rng.random_range(0.2..2.0);
        let d = rng.random_range(0.01..1.0) * r;
        let exact = lens_shadow_area_exact(r, d).unwrap();
        let (x0, x1) = (-r, d + r);
        let box_area = (x1 - x0) * r;
        let hits = (0..SAMPLES)
            .filter(|_| {
                let x = rng.random_range(x0..x1);
                let y = rng.random_range(0.0..r);
                (x - d).powi(2) + y * y <= r * r && x * x + y * y > r * r
            })
            .count();
        let (upper, se) = estimate(hits, box_area);
        let h = (r * r - d * d / 4.0).sqrt();
        let mc = upper + d * h / 2.0 - d * (r * r - d * d).sqrt();
        assert!(
            (exact - mc).abs() <= 3.0 * se,
            "case {case}: {exact} vs {mc} ± {se}"
        );
    }
}

#[test]
fn series_within_remainder_bound() {
    for i in 1..=300 {
        let u = 0.3 * i as f64 / 300.0;
        for r in [0.01, 1.0, 3.0] {
            let d = u * r;
            let e = lens_shadow_area_exact(r, d).unwrap();
            let s = lens_shadow_area_series(r, d).unwrap();
            assert!(
                (e - s).abs() <= 0.01 * u.powi(5) * r * r + 1e-15 * r * r,
                "u={u} r={r}"
            );
        }
    }
}

#[test]
fn shadow_exceeds_half_rd() {
    for i in 1..=1000 {
        let u = i as f64 / 1000.0;
        let s = lens_shadow_area_exact(1.0, u).unwrap();
        assert!(s > 0.5 * u, "u={u}");
    }
}

/// From `S > rd/2` and `d >= 1/√n`: `nS >= (nπr²)^{1/2} / (2√π)`.
#[test]
fn shadow_lower_bound_in_n() {
    for n in [1e3f64, 1e4, 1e5, 1e6, 1e8] {
        let r = (n.ln() / (PI * n)).sqrt();
        let d_min = 1.0 / n.sqrt();
        let rhs = (n * PI * r * r).sqrt() / (2.0 * PI.sqrt());
        for j in 0..=200 {
            let d = d_min + (r - d_min) * j as f64 / 200.0;
            let s = lens_shadow_area_exact(r, d).unwrap();
            assert!(n * s >= rhs, "n={n} d={d}");
        }
    }
}

/// The same bound with constant `1/√π` instead of `1/(2√π)` fails just above
/// `d = 1/√n`: there `nS ≈ √n·r/2`, half of what it would need.
#[test]
fn shadow_bound_with_larger_constant_fails_near_threshold() {
    let n: f64 = 1e6;
    let r = (n.ln() / (PI * n)).sqrt();
    let d = 1.0 / n.sqrt();
    let s = lens_shadow_area_exact(r, d).unwrap();
    let claimed = (n * PI * r * r).sqrt() / PI.sqrt();
    assert!(n * s < 0.6 * claimed);
    // from d = 2/√n on the larger constant does hold
    for j in 0..=200 {
        let d = 2.0 / n.sqrt() + (r - 2.0 / n.sqrt()) * j as f64 / 200.0;
        assert!(n * lens_shadow_area_exact(r, d).unwrap() >= claimed);
    }
}

/// `|B(x, r) ∩ Ω| >= (θ_min / 2) r²` for centers anywhere in a convex polygon
/// when `r` is below half the shortest edge.
#[test]
fn ball_area_above_min_angle_sector() {
    let polys = vec![
        ConvexRegion::unit_square(),
        ConvexRegion::regular_polygon(6).unwrap(),
        ConvexRegion::polygon(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(0.3, 1.0),
        ])
        .unwrap(),
        ConvexRegion::polygon(vec![
            Point::new(0.0, 0.0),
            Point::new(3.0, 0.0),
            Point::new(3.2, 0.4),
            Point::new(0.5, 0.9),
        ])
        .unwrap(),
    ];
    let mut rng = rng_for(14, 0);
    for region in &polys {
        let rgg_core::RegionKind::Polygon { vertices } = region.kind() else {
            unreachable!()
        };
        let m = vertices.len();
        let mut theta_min = f64::INFINITY;
        let mut edge_min = f64::INFINITY;
        for i in 0..m {
            let (a, b, c) = (
                vertices[(i + m - 1) % m],
                vertices[i],
                vertices[(i + 1) % m],
            );
            let (u, v) = (a.sub(b), c.sub(b));
            theta_min = theta_min.min((u.dot(v) / (u.norm() * v.norm())).acos());
            edge_min = edge_min.min(v.norm());
        }
        for _ in 0..2000 {
            let r = rng.random_range(0.01..0.5) * edge_min;
            // half the centers near a vertex, where the bound is tight
            let x = if rng.random_bool(0.5) {
                let v = vertices[rng.random_range(0..m)];
                let p = v.add(Point::new(rng.random_range(-r..r), rng.random_range(-r..r)));
                if !region.contains(p) {
                    continue;
                }
                p
            } else {
                uniform_point(region, &mut rng)
            };
            let a = region.ball_intersection_area(x, r).unwrap();
            assert!(
                a >= 0.5 * theta_min * r * r * (1.0 - 1e-12),
                "{} at {x:?}",
                region.label()
            );
        }
    }
}

#[test]
fn square_ball_area_above_quarter_disk() {
    let sq = ConvexRegion::unit_square();
    let mut rng = rng_for(15, 0);
    for _ in 0..5000 {
        let r = rng.random_range(0.001..0.5);
        let x = uniform_point(&sq, &mut rng);
        assert!(sq.ball_intersection_area(x, r).unwrap() >= PI * r * r / 4.0 * (1.0 - 1e-12));
    }
}
