//! Exact critical radii of a point set.

use serde::{Deserialize, Serialize};

use super::connectivity::k_connected_unchecked;
use super::grid::Grid;
use super::{pairs_within, Graph, UnionFind};
use crate::error::{domain, Result};
use crate::geometry::Point;
use crate::sampling::PointSet;

/// The two critical radii of one point set for the same order `k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    /// Smallest `r` with minimum degree `>= k`.
    pub rho_delta: f64,
    /// Smallest `r` with vertex connectivity `>= k`.
    pub rho_kappa: f64,
    pub k: usize,
    pub equal: bool,
}

fn check(points: &PointSet, k: usize) -> Result<()> {
    if k < 1 {
        return domain("critical radius order k must be >= 1");
    }
    if points.len() <= k {
        return domain(format!(
            "need more than k = {k} points, got {}",
            points.len()
        ));
    }
    Ok(())
}

/// `ρ(δ >= k)`: the largest k-th nearest neighbor distance.
pub fn min_degree_radius(points: &PointSet, k: usize) -> Result<f64> {
    check(points, k)?;
    Ok(kth_nn_max(&points.points, k))
}

fn kth_nn_max(pts: &[Point], k: usize) -> f64 {
    let n = pts.len();
    let (lo, hi) = bbox(pts);
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    // about k+1 points per cell
    let fill = (k + 1) as f64 / n as f64;
    let mut cell = (w * h * fill).sqrt();
    if !(cell > 0.0) {
        cell = w.max(h) * fill;
    }
    if !(cell > 0.0) {
        // all points coincide
        return 0.0;
    }
    let grid = Grid::new(pts, cell);
    (0..n)
        .map(|i| grid.kth_neighbor_distance(i, k))
        .fold(0.0, f64::max)
}

fn bbox(pts: &[Point]) -> (Point, Point) {
    let mut lo = pts[0];
    let mut hi = pts[0];
    for p in pts {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    (lo, hi)
}

/// `ρ(κ >= k)`: the smallest pairwise distance at which the graph becomes
/// k-connected.
pub fn connectivity_radius(points: &PointSet, k: usize) -> Result<f64> {
    check(points, k)?;
    let floor = kth_nn_max(&points.points, k);
    Ok(connectivity_radius_from(&points.points, k, floor))
}

/// Both radii, sharing the k-th neighbor pass.
pub fn radii(points: &PointSet, k: usize) -> Result<RadiusResult> {
    check(points, k)?;
    let rho_delta = kth_nn_max(&points.points, k);
    let rho_kappa = connectivity_radius_from(&points.points, k, rho_delta);
    Ok(RadiusResult {
        rho_delta,
        rho_kappa,
        k,
        equal: rho_delta == rho_kappa,
    })
}

fn sorted_pairs(pts: &[Point], r: f64) -> Vec<(u32, u32, f64)> {
    let mut e = pairs_within(pts, r);
    e.sort_unstable_by(|a, b| a.2.total_cmp(&b.2).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
    e
}

fn prefix_graph(n: usize, edges: &[(u32, u32, f64)], r: f64) -> Graph {
    let m = edges.partition_point(|e| e.2 <= r);
    Graph::from_edges(
        n,
        edges[..m].iter().map(|e| (e.0 as usize, e.1 as usize)),
        r,
    )
}

/// k-connectivity is monotone in `r` and impossible below `floor`
/// (`ρ(δ >= k)`), so the answer is the first candidate distance `>= floor`
/// at which the graph is k-connected. Candidates come from a window
/// `(floor, hi]` that is widened geometrically until it contains the answer.
fn connectivity_radius_from(pts: &[Point], k: usize, floor: f64) -> f64 {
    let n = pts.len();
    let (lo, hi_pt) = bbox(pts);
    let diag = hi_pt.dist(lo);
    let mut hi = floor;
    loop {
        let edges = sorted_pairs(pts, hi);
        if k == 1 {
            // Kruskal: the edge that joins the last two components
            let mut uf = UnionFind::new(n);
            for &(a, b, d) in &edges {
                if uf.union(a as usize, b as usize) && uf.components() == 1 {
                    return d.max(floor);
                }
            }
        } else {
            let full = prefix_graph(n, &edges, f64::INFINITY);
            if k_connected_unchecked(&full, k) {
                let mut cands = vec![floor];
                for e in &edges {
                    if e.2 > *cands.last().unwrap() {
                        cands.push(e.2);
                    }
                }
                // cands[last] is k-connected; find the first that is
                let (mut a, mut b) = (0usize, cands.len() - 1);
                while a < b {
                    let mid = (a + b) / 2;
                    if k_connected_unchecked(&prefix_graph(n, &edges, cands[mid]), k) {
                        b = mid;
                    } else {
                        a = mid + 1;
                    }
                }
                return cands[a];
            }
        }
        hi = if hi <= 0.0 || hi * 1.5 >= diag {
            f64::INFINITY
        } else {
            hi * 1.5
        };
    }
}
