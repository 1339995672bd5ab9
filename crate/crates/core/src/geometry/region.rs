use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{
    circle_polygon_area, circle_polygon_moments, clip_half_plane, disk_disk_intersection_area,
    point_segment_distance, polygon_area_centroid, Point,
};
use crate::error::{domain, Error, Result};

/// Relative tolerance for geometric predicates, scaled by the appropriate
/// power of the region diameter.
const REL_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RegionKind {
    /// Strictly convex, counterclockwise vertex list.
    Polygon {
        vertices: Vec<Point>,
    },
    Disk {
        center: Point,
        radius: f64,
    },
}

/// A convex planar domain with cached area and perimeter.
///
/// Immutable once built; every constructor validates convexity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexRegion {
    kind: RegionKind,
    area: f64,
    perimeter: f64,
    label: String,
}

impl ConvexRegion {
    /// Builds a convex polygon.
    ///
    /// Clockwise input is reversed. Consecutive vertices that are collinear
    /// within tolerance are merged; repeated vertices, reflex vertices and
    /// self-overlapping (star) outlines are rejected.
    pub fn polygon(vertices: Vec<Point>) -> Result<Self> {
        let invalid = |m: &str| Err(Error::InvalidRegion(m.to_string()));
        if vertices.len() < 3 {
            return invalid("polygon needs at least 3 vertices");
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return invalid("polygon has non-finite coordinates");
        }
        let mut v = vertices;
        for i in 0..v.len() {
            if v[i] == v[(i + 1) % v.len()] {
                return invalid("polygon has a zero-length edge");
            }
        }
        let (signed, _) = polygon_area_centroid(&v);
        if signed < 0.0 {
            v.reverse();
        }
        let diag = bbox_diagonal(&v);
        let tol = REL_TOL * diag * diag;

        // merge collinear runs until stable
        loop {
            let n = v.len();
            if n < 3 {
                return invalid("polygon is degenerate (collinear vertices)");
            }
            let mut removed = false;
            for i in 0..n {
                let prev = v[(i + n - 1) % n];
                let cur = v[i];
                let next = v[(i + 1) % n];
                let c = cur.sub(prev).cross(next.sub(cur));
                if c.abs() <= tol {
                    // a collinear fold-back (prev -> cur -> prev) is not a merge
                    if cur.sub(prev).dot(next.sub(cur)) < 0.0 {
                        return invalid("polygon folds back on itself");
                    }
                    v.remove(i);
                    removed = true;
                    break;
                }
                if c < 0.0 {
                    return invalid("polygon is not convex (reflex vertex)");
                }
            }
            if !removed {
                break;
            }
        }

        // all left turns; the turning number must be one
        let n = v.len();
        let mut turning = 0.0;
        for i in 0..n {
            let a = v[(i + 1) % n].sub(v[i]);
            let b = v[(i + 2) % n].sub(v[(i + 1) % n]);
            turning += a.cross(b).atan2(a.dot(b));
        }
        if (turning - 2.0 * PI).abs() > 1e-6 {
            return invalid("polygon outline winds more than once");
        }

        let (area, _) = polygon_area_centroid(&v);
        if !(area > 0.0) {
            return invalid("polygon has zero area");
        }
        let perimeter = (0..n).map(|i| v[i].dist(v[(i + 1) % n])).sum();
        let label = format!("polygon[{n}]");
        Ok(Self {
            kind: RegionKind::Polygon { vertices: v },
            area,
            perimeter,
            label,
        })
    }

    pub fn disk(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || !(radius > 0.0) {
            return Err(Error::InvalidRegion(format!(
                "disk needs a finite center and positive radius, got radius {radius}"
            )));
        }
        Ok(Self {
            kind: RegionKind::Disk { center, radius },
            area: PI * radius * radius,
            perimeter: 2.0 * PI * radius,
            label: "disk".to_string(),
        })
    }

    /// `[0,1]²`.
    pub fn unit_square() -> Self {
        Self::rectangle(1.0, 1.0).unwrap().with_label("unit-square")
    }

    /// Disk of radius `1/√π` centered at the origin.
    pub fn unit_disk() -> Self {
        Self::disk(Point::new(0.0, 0.0), 1.0 / PI.sqrt())
            .unwrap()
            .with_label("unit-disk")
    }

    /// Axis-aligned `width × height` rectangle with its lower-left corner at
    /// the origin.
    pub fn rectangle(width: f64, height: f64) -> Result<Self> {
        if !(width > 0.0 && height > 0.0) || !width.is_finite() || !height.is_finite() {
            return Err(Error::InvalidRegion(format!(
                "rectangle sides must be positive, got {width} x {height}"
            )));
        }
        Ok(Self::polygon(vec![
            Point::new(0.0, 0.0),
            Point::new(width, 0.0),
            Point::new(width, height),
            Point::new(0.0, height),
        ])?
        .with_label(format!("rect-{width}x{height}")))
    }

    /// Unit-area `width × 1/width` rectangle.
    pub fn unit_rectangle(width: f64) -> Result<Self> {
        Ok(Self::rectangle(width, 1.0 / width)?.with_label(format!("rect-w{width}")))
    }

    /// Unit-area regular polygon centered at the origin with a vertex on the
    /// positive x axis.
    pub fn regular_polygon(sides: usize) -> Result<Self> {
        if sides < 3 {
            return Err(Error::InvalidRegion(format!(
                "regular polygon needs at least 3 sides, got {sides}"
            )));
        }
        let n = sides as f64;
        // area = n/2 · R² · sin(2π/n) = 1
        let radius = (2.0 / (n * (2.0 * PI / n).sin())).sqrt();
        let verts = (0..sides)
            .map(|i| {
                let a = 2.0 * PI * i as f64 / n;
                Point::new(radius * a.cos(), radius * a.sin())
            })
            .collect();
        Ok(Self::polygon(verts)?.with_label(format!("regular-{sides}")))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn kind(&self) -> &RegionKind {
        &self.kind
    }

    /// Identifier used in point-set provenance and CSV output.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn is_disk(&self) -> bool {
        matches!(self.kind, RegionKind::Disk { .. })
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        match &self.kind {
            RegionKind::Polygon { vertices } => {
                let mut lo = vertices[0];
                let mut hi = vertices[0];
                for p in vertices {
                    lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
                    hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
                }
                (lo, hi)
            }
            RegionKind::Disk { center, radius } => (
                Point::new(center.x - radius, center.y - radius),
                Point::new(center.x + radius, center.y + radius),
            ),
        }
    }

    pub fn diameter_bound(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        hi.dist(lo)
    }

    pub fn centroid(&self) -> Point {
        match &self.kind {
            RegionKind::Polygon { vertices } => polygon_area_centroid(vertices).1,
            RegionKind::Disk { center, .. } => *center,
        }
    }

    /// Uniform scaling by `s` about the centroid.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return domain(format!("scale factor must be positive, got {s}"));
        }
        let c = self.centroid();
        let out = match &self.kind {
            RegionKind::Polygon { vertices } => {
                Self::polygon(vertices.iter().map(|p| c.add(p.sub(c).scale(s))).collect())?
            }
            RegionKind::Disk { center, radius } => Self::disk(*center, radius * s)?,
        };
        Ok(out.with_label(self.label.clone()))
    }

    /// Rescales about the centroid so that the area is one.
    pub fn normalize_unit_area(&self) -> Result<Self> {
        if (self.area - 1.0).abs() <= 1e-15 {
            return Ok(self.clone());
        }
        self.scaled(1.0 / self.area.sqrt())
    }

    fn tol_len(&self) -> f64 {
        REL_TOL * self.diameter_bound()
    }

    /// Closed containment: boundary points are inside.
    pub fn contains(&self, p: Point) -> bool {
        match &self.kind {
            RegionKind::Polygon { vertices } => {
                let tol = REL_TOL * self.diameter_bound().powi(2);
                let n = vertices.len();
                (0..n).all(|i| {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    b.sub(a).cross(p.sub(a)) >= -tol
                })
            }
            RegionKind::Disk { center, radius } => p.dist(*center) <= radius + self.tol_len(),
        }
    }

    /// Distance from an inside point to the boundary.
    pub fn distance_to_boundary(&self, p: Point) -> Result<f64> {
        if !self.contains(p) {
            return domain(format!("point ({}, {}) is outside the region", p.x, p.y));
        }
        Ok(self.boundary_distance_unchecked(p))
    }

    /// Boundary distance without the containment check; meaningful only for
    /// points inside the region.
    pub(crate) fn boundary_distance_unchecked(&self, p: Point) -> f64 {
        match &self.kind {
            RegionKind::Polygon { vertices } => {
                let n = vertices.len();
                (0..n)
                    .map(|i| point_segment_distance(p, vertices[i], vertices[(i + 1) % n]))
                    .fold(f64::INFINITY, f64::min)
            }
            RegionKind::Disk { center, radius } => (radius - p.dist(*center)).max(0.0),
        }
    }

    /// `|B(center, r) ∩ region|`, exact up to rounding.
    pub fn ball_intersection_area(&self, center: Point, r: f64) -> Result<f64> {
        if !(r > 0.0) || !r.is_finite() {
            return domain(format!("ball radius must be positive, got {r}"));
        }
        if !self.contains(center) {
            return domain(format!(
                "ball center ({}, {}) is outside the region",
                center.x, center.y
            ));
        }
        Ok(self.ball_area_unchecked(center, r))
    }

    pub(crate) fn ball_area_unchecked(&self, center: Point, r: f64) -> f64 {
        let full = PI * r * r;
        if self.boundary_distance_unchecked(center) >= r {
            return full;
        }
        let a = match &self.kind {
            RegionKind::Polygon { vertices } => circle_polygon_area(center, r, vertices),
            RegionKind::Disk {
                center: c,
                radius: rr,
            } => disk_disk_intersection_area(center, r, *c, *rr),
        };
        a.min(full)
    }

    /// Area of the inner parallel set `{x : dist(x, ∂Ω) >= r}`.
    pub fn inner_parallel_area(&self, r: f64) -> f64 {
        match &self.kind {
            RegionKind::Polygon { vertices } => {
                let n = vertices.len();
                let mut poly = vertices.clone();
                for i in 0..n {
                    if poly.len() < 3 {
                        return 0.0;
                    }
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    let e = b.sub(a);
                    // inward normal of a counterclockwise edge
                    let nrm = Point::new(-e.y, e.x).scale(r / e.norm());
                    poly = clip_half_plane(&poly, a.add(nrm), b.add(nrm));
                }
                polygon_area_centroid(&poly).0.max(0.0)
            }
            RegionKind::Disk { radius, .. } => {
                let inner = (radius - r).max(0.0);
                PI * inner * inner
            }
        }
    }

    /// Area and centroid of `cell ∩ region` for a counterclockwise convex
    /// cell polygon.
    pub fn clip_convex(&self, cell: &[Point]) -> (f64, Point) {
        match &self.kind {
            RegionKind::Polygon { vertices } => {
                let n = vertices.len();
                let mut poly = cell.to_vec();
                for i in 0..n {
                    if poly.len() < 3 {
                        return (0.0, cell[0]);
                    }
                    poly = clip_half_plane(&poly, vertices[i], vertices[(i + 1) % n]);
                }
                let (a, c) = polygon_area_centroid(&poly);
                (a.max(0.0), c)
            }
            RegionKind::Disk { center, radius } => circle_polygon_moments(*center, *radius, cell),
        }
    }
}

fn bbox_diagonal(v: &[Point]) -> f64 {
    let (mut lo, mut hi) = (v[0], v[0]);
    for p in v {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    hi.dist(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn areas_and_perimeters() {
        let sq = ConvexRegion::unit_square();
        assert_eq!(sq.area(), 1.0);
        assert_eq!(sq.perimeter(), 4.0);
        let d = ConvexRegion::unit_disk();
        assert!((d.area() - 1.0).abs() < 1e-15);
        assert!((d.perimeter() - 2.0 * PI.sqrt()).abs() < 1e-15);
        let tri = ConvexRegion::polygon(vec![p(0.0, 0.0), p(2.0, 0.0), p(0.0, 2.0)]).unwrap();
        assert_eq!(tri.area(), 2.0);
        let big = ConvexRegion::rectangle(2.0, 2.0).unwrap();
        assert_eq!(big.perimeter(), 8.0);
    }

    #[test]
    fn degenerate_polygons_rejected() {
        assert!(ConvexRegion::polygon(vec![p(0.0, 0.0), p(1.0, 0.0)]).is_err());
        assert!(ConvexRegion::polygon(vec![p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)]).is_err());
        assert!(ConvexRegion::polygon(vec![p(0.0, 0.0), p(0.0, 0.0), p(1.0, 1.0)]).is_err());
        // reflex vertex
        let dart = vec![p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.5), p(1.0, 2.0)];
        assert!(ConvexRegion::polygon(dart).is_err());
        // pentagram: all left turns but winds twice
        let star: Vec<Point> = (0..5)
            .map(|i| {
                let a = 4.0 * PI * i as f64 / 5.0;
                p(a.cos(), a.sin())
            })
            .collect();
        assert!(ConvexRegion::polygon(star).is_err());
        assert!(ConvexRegion::disk(p(0.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn collinear_vertices_merged_and_clockwise_reversed() {
        let r = ConvexRegion::polygon(vec![
            p(0.0, 0.0),
            p(0.0, 1.0),
            p(1.0, 1.0),
            p(1.0, 0.5),
            p(1.0, 0.0),
        ])
        .unwrap();
        match r.kind() {
            RegionKind::Polygon { vertices } => assert_eq!(vertices.len(), 4),
            _ => unreachable!(),
        }
        assert_eq!(r.area(), 1.0);
    }

    #[test]
    fn normalization() {
        let big = ConvexRegion::rectangle(2.0, 2.0).unwrap();
        let n = big.normalize_unit_area().unwrap();
        assert!((n.area() - 1.0).abs() < 1e-12);
        assert!((n.perimeter() - 4.0).abs() < 1e-12);
        let sq = ConvexRegion::unit_square();
        assert_eq!(sq.normalize_unit_area().unwrap(), sq);
        let thin = ConvexRegion::unit_rectangle(0.1).unwrap();
        let tn = thin.normalize_unit_area().unwrap();
        assert!((tn.area() - 1.0).abs() < 1e-9);
        assert!((tn.perimeter() - 20.2).abs() < 1e-9);
    }

    #[test]
    fn containment_and_distance() {
        let sq = ConvexRegion::unit_square();
        assert!(sq.contains(p(0.5, 0.5)));
        assert!(!sq.contains(p(1.5, 0.5)));
        assert!(sq.contains(p(1.0, 0.5)));
        assert_eq!(sq.distance_to_boundary(p(0.5, 0.5)).unwrap(), 0.5);
        assert!((sq.distance_to_boundary(p(0.1, 0.3)).unwrap() - 0.1).abs() < 1e-15);
        assert_eq!(sq.distance_to_boundary(p(1.0, 0.5)).unwrap(), 0.0);
        assert!(sq.distance_to_boundary(p(2.0, 0.5)).is_err());
        let d = ConvexRegion::unit_disk();
        assert!((d.distance_to_boundary(p(0.0, 0.0)).unwrap() - 1.0 / PI.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn ball_area_examples() {
        let sq = ConvexRegion::unit_square();
        let a = sq.ball_intersection_area(p(0.5, 0.5), 0.1).unwrap();
        assert_eq!(a, PI * 0.01);
        let a = sq.ball_intersection_area(p(0.0, 0.0), 0.1).unwrap();
        assert!((a - PI * 0.01 / 4.0).abs() < 1e-15);
        let a = sq.ball_intersection_area(p(0.05, 0.5), 0.1).unwrap();
        let want = super::super::segment_area(0.1, 0.05).unwrap();
        assert!((a - want).abs() < 1e-15, "{a} vs {want}");
        assert!(sq.ball_intersection_area(p(2.0, 0.5), 0.1).is_err());
        assert!(sq.ball_intersection_area(p(0.5, 0.5), 0.0).is_err());
    }

    #[test]
    fn quarter_disk_lower_bound_on_square() {
        // angle-based lower bound: at a right-angle corner the ball keeps ≥ 1/4
        let sq = ConvexRegion::unit_square();
        let mut x = 0.0;
        while x <= 1.0 {
            let mut y = 0.0;
            while y <= 1.0 {
                for r in [0.01, 0.1, 0.3, 0.5] {
                    let a = sq.ball_intersection_area(p(x, y), r).unwrap();
                    assert!(a >= PI * r * r / 4.0 * (1.0 - 1e-12));
                }
                y += 0.0625;
            }
            x += 0.0625;
        }
    }

    #[test]
    fn inner_parallel_area_square_and_disk() {
        let sq = ConvexRegion::unit_square();
        assert!((sq.inner_parallel_area(0.1) - 0.64).abs() < 1e-14);
        assert_eq!(sq.inner_parallel_area(0.6), 0.0);
        let d = ConvexRegion::disk(p(0.0, 0.0), 1.0).unwrap();
        assert!((d.inner_parallel_area(0.5) - PI * 0.25).abs() < 1e-15);
        // triangle with inradius ρ shrinks homothetically: area·(1 − r/ρ)²
        let tri = ConvexRegion::polygon(vec![p(0.0, 0.0), p(3.0, 0.0), p(0.0, 4.0)]).unwrap();
        let rho = 2.0 * tri.area() / tri.perimeter();
        let a = tri.inner_parallel_area(0.5);
        assert!((a - 6.0 * (1.0 - 0.5 / rho).powi(2)).abs() < 1e-12);
    }

    #[test]
    fn clip_cells() {
        let sq = ConvexRegion::unit_square();
        let cell = [p(0.9, 0.9), p(1.1, 0.9), p(1.1, 1.1), p(0.9, 1.1)];
        let (a, c) = sq.clip_convex(&cell);
        assert!((a - 0.01).abs() < 1e-15);
        assert!((c.x - 0.95).abs() < 1e-14 && (c.y - 0.95).abs() < 1e-14);
        let d = ConvexRegion::disk(p(0.0, 0.0), 1.0).unwrap();
        let big = [p(-2.0, -2.0), p(2.0, -2.0), p(2.0, 2.0), p(-2.0, 2.0)];
        let (a, c) = d.clip_convex(&big);
        assert!((a - PI).abs() < 1e-13);
        assert!(c.norm() < 1e-13);
    }

    proptest! {
        #[test]
        fn ball_area_bounds(x in 0.0f64..=1.0, y in 0.0f64..=1.0, r in 0.001f64..0.5) {
            let sq = ConvexRegion::unit_square();
            let a = sq.ball_intersection_area(p(x, y), r).unwrap();
            let full = PI * r * r;
            prop_assert!(a > 0.0 && a <= full);
            let db = sq.distance_to_boundary(p(x, y)).unwrap();
            if db >= r {
                prop_assert_eq!(a, full);
            } else {
                prop_assert!(a < full * (1.0 + 1e-12));
            }
        }

        #[test]
        fn scaling_laws(s in 0.1f64..10.0, x in 0.1f64..0.9, y in 0.1f64..0.9, r in 0.01f64..0.3) {
            let sq = ConvexRegion::unit_square();
            let big = sq.scaled(s).unwrap();
            prop_assert!((big.area() - s * s).abs() <= 1e-12 * s * s);
            prop_assert!((big.perimeter() - 4.0 * s).abs() <= 1e-12 * s);
            let c = sq.centroid();
            let q = c.add(p(x, y).sub(c).scale(s));
            let a = sq.ball_intersection_area(p(x, y), r).unwrap();
            let b = big.ball_intersection_area(q, r * s).unwrap();
            prop_assert!((b - a * s * s).abs() <= 1e-10 * s * s * r * r);
        }

        #[test]
        fn contains_agrees_with_distance(x in -0.5f64..1.5, y in -0.5f64..1.5) {
            let hex = ConvexRegion::regular_polygon(6).unwrap();
            let q = p(x - 0.5, y - 0.5);
            let inside = hex.contains(q);
            prop_assert_eq!(inside, hex.distance_to_boundary(q).is_ok());
            if inside {
                prop_assert!(hex.distance_to_boundary(q).unwrap() >= 0.0);
            }
        }

        #[test]
        fn isoperimetric(sides in 3usize..40) {
            let reg = ConvexRegion::regular_polygon(sides).unwrap();
            prop_assert!((reg.area() - 1.0).abs() < 1e-12);
            prop_assert!(reg.perimeter().powi(2) > 4.0 * PI * reg.area());
        }
    }
}
