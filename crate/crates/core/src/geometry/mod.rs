//! Exact planar geometry: convex regions, ball/region intersection areas and
//! the closed-form areas used by the boundary analysis.

mod circle;
mod lens;
mod region;
pub mod spec;

pub use circle::{circle_polygon_area, circle_polygon_moments, disk_disk_intersection_area};
pub use lens::{lens_shadow_area_exact, lens_shadow_area_series, segment_area};
pub use region::{ConvexRegion, RegionKind};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }

    #[inline]
    pub fn scale(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Euclidean distance. Every pairwise distance in the crate goes through
    /// this function so that radii compare bit-exactly against edge lengths.
    #[inline]
    pub fn dist(self, o: Point) -> f64 {
        let dx = self.x - o.x;
        let dy = self.y - o.y;
        (dx * dx + dy * dy).sqrt()
    }
}

impl From<[f64; 2]> for Point {
    fn from(p: [f64; 2]) -> Self {
        Point::new(p[0], p[1])
    }
}

/// Distance from `p` to the closed segment `a`-`b`.
pub(crate) fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b.sub(a);
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return p.dist(a);
    }
    let t = (p.sub(a).dot(ab) / len_sq).clamp(0.0, 1.0);
    p.dist(a.add(ab.scale(t)))
}

/// Signed area (positive for counterclockwise order) and centroid of a
/// simple polygon. Returns a zero area and the vertex mean when degenerate.
pub(crate) fn polygon_area_centroid(poly: &[Point]) -> (f64, Point) {
    if poly.len() < 3 {
        return (0.0, mean(poly));
    }
    let o = poly[0];
    let mut a2 = 0.0;
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 1..poly.len() - 1 {
        let p = poly[i].sub(o);
        let q = poly[i + 1].sub(o);
        let c = p.cross(q);
        a2 += c;
        cx += c * (p.x + q.x);
        cy += c * (p.y + q.y);
    }
    if a2 == 0.0 {
        return (0.0, mean(poly));
    }
    let area = a2 / 2.0;
    (
        area,
        Point::new(o.x + cx / (3.0 * a2), o.y + cy / (3.0 * a2)),
    )
}

fn mean(pts: &[Point]) -> Point {
    if pts.is_empty() {
        return Point::new(0.0, 0.0);
    }
    let s = pts.iter().fold(Point::new(0.0, 0.0), |acc, p| acc.add(*p));
    s.scale(1.0 / pts.len() as f64)
}

/// Clips a polygon against the half-plane to the left of the directed line
/// `a -> b` (Sutherland-Hodgman, one plane).
pub(crate) fn clip_half_plane(poly: &[Point], a: Point, b: Point) -> Vec<Point> {
    let dir = b.sub(a);
    let side = |p: Point| dir.cross(p.sub(a));
    let mut out = Vec::with_capacity(poly.len() + 2);
    for i in 0..poly.len() {
        let cur = poly[i];
        let next = poly[(i + 1) % poly.len()];
        let sc = side(cur);
        let sn = side(next);
        if sc >= 0.0 {
            out.push(cur);
        }
        if (sc >= 0.0) != (sn >= 0.0) {
            let t = sc / (sc - sn);
            out.push(cur.add(next.sub(cur).scale(t)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_distance_cases() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 0.0);
        assert_eq!(point_segment_distance(Point::new(0.5, 2.0), a, b), 2.0);
        assert_eq!(point_segment_distance(Point::new(-3.0, 4.0), a, b), 5.0);
        assert_eq!(point_segment_distance(Point::new(2.0, 0.0), a, a), 2.0);
    }

    #[test]
    fn centroid_of_square() {
        let sq = [
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(0.0, 2.0),
        ];
        let (a, c) = polygon_area_centroid(&sq);
        assert_eq!(a, 4.0);
        assert!((c.x - 1.0).abs() < 1e-15 && (c.y - 1.0).abs() < 1e-15);
    }

    #[test]
    fn half_plane_clip_cuts_square_in_half() {
        let sq = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        // keep x <= 0.5: left of the upward line x = 0.5
        let out = clip_half_plane(&sq, Point::new(0.5, 0.0), Point::new(0.5, 1.0));
        let (a, _) = polygon_area_centroid(&out);
        assert!((a - 0.5).abs() < 1e-15);
    }
}
