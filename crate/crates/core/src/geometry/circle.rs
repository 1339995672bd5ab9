use std::f64::consts::PI;

use super::Point;

/// Area and first moment of `disk(center, radius) ∩ poly`.
///
/// `poly` must be a convex (or at least simple) polygon in counterclockwise
/// order. The intersection is accumulated edge by edge: each directed edge
/// `p -> q` contributes the signed area of `disk ∩ triangle(center, p, q)`,
/// which is a triangle where the edge runs inside the circle and a circular
/// sector where it runs outside. Returns `(area, centroid)`; the centroid is
/// `center` when the area is zero.
pub fn circle_polygon_moments(center: Point, radius: f64, poly: &[Point]) -> (f64, Point) {
    let r2 = radius * radius;
    let r3 = r2 * radius;
    let mut area = 0.0;
    let mut mx = 0.0;
    let mut my = 0.0;

    let mut piece = |u: Point, v: Point| {
        let mid = u.add(v).scale(0.5);
        if mid.norm_sq() <= r2 {
            let a = 0.5 * u.cross(v);
            area += a;
            mx += a * (u.x + v.x) / 3.0;
            my += a * (u.y + v.y) / 3.0;
        } else {
            let phi = u.cross(v).atan2(u.dot(v));
            area += 0.5 * r2 * phi;
            let (nu, nv) = (u.norm(), v.norm());
            if nu > 0.0 && nv > 0.0 {
                mx += r3 / 3.0 * (v.y / nv - u.y / nu);
                my += r3 / 3.0 * (u.x / nu - v.x / nv);
            }
        }
    };

    for i in 0..poly.len() {
        let a = poly[i].sub(center);
        let b = poly[(i + 1) % poly.len()].sub(center);
        let d = b.sub(a);
        let qa = d.norm_sq();
        if qa == 0.0 {
            continue;
        }
        let qb = 2.0 * a.dot(d);
        let qc = a.norm_sq() - r2;
        let disc = qb * qb - 4.0 * qa * qc;
        if disc <= 0.0 {
            piece(a, b);
            continue;
        }
        let sq = disc.sqrt();
        let t1 = (-qb - sq) / (2.0 * qa);
        let t2 = (-qb + sq) / (2.0 * qa);
        let mut cuts = [0.0, 1.0, 1.0, 1.0];
        let mut m = 1;
        for t in [t1, t2] {
            if t > 0.0 && t < 1.0 {
                cuts[m] = t;
                m += 1;
            }
        }
        cuts[m] = 1.0;
        let at = |t: f64| {
            if t == 0.0 {
                a
            } else if t == 1.0 {
                b
            } else {
                a.add(d.scale(t))
            }
        };
        for w in cuts[..=m].windows(2) {
            if w[1] > w[0] {
                piece(at(w[0]), at(w[1]));
            }
        }
    }

    let area = area.max(0.0);
    if area == 0.0 {
        return (0.0, center);
    }
    (area, Point::new(center.x + mx / area, center.y + my / area))
}

/// Area of `disk(center, radius) ∩ poly` for a counterclockwise polygon.
pub fn circle_polygon_area(center: Point, radius: f64, poly: &[Point]) -> f64 {
    circle_polygon_moments(center, radius, poly)
        .0
        .min(PI * radius * radius)
}

/// Area of the intersection of two disks.
pub fn disk_disk_intersection_area(c1: Point, r1: f64, c2: Point, r2: f64) -> f64 {
    let d = c1.dist(c2);
    if d >= r1 + r2 {
        return 0.0;
    }
    if d <= (r1 - r2).abs() {
        let m = r1.min(r2);
        return PI * m * m;
    }
    let a1 = ((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1))
        .clamp(-1.0, 1.0)
        .acos();
    let a2 = ((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2))
        .clamp(-1.0, 1.0)
        .acos();
    let k = ((-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2)).max(0.0);
    r1 * r1 * a1 + r2 * r2 * a2 - 0.5 * k.sqrt()
}
