//! Uniform bucket grid for fixed-radius pair enumeration and k-th nearest
//! neighbor distances.

use std::collections::HashMap;

use crate::geometry::Point;

type Cell = (i64, i64);

pub(crate) struct Grid<'a> {
    points: &'a [Point],
    origin: Point,
    cell: f64,
    order: Vec<usize>,
    buckets: HashMap<Cell, (usize, usize)>,
}

impl<'a> Grid<'a> {
    pub(crate) fn new(points: &'a [Point], cell: f64) -> Self {
        debug_assert!(cell > 0.0);
        let origin = points
            .iter()
            .fold(Point::new(f64::INFINITY, f64::INFINITY), |lo, p| {
                Point::new(lo.x.min(p.x), lo.y.min(p.y))
            });
        let key = |p: &Point| -> Cell {
            (
                ((p.x - origin.x) / cell).floor() as i64,
                ((p.y - origin.y) / cell).floor() as i64,
            )
        };
        let mut keyed: Vec<(Cell, usize)> = points
            .iter()
            .enumerate()
            .map(|(i, p)| (key(p), i))
            .collect();
        keyed.sort_unstable();
        let mut buckets = HashMap::new();
        let mut start = 0;
        while start < keyed.len() {
            let k = keyed[start].0;
            let mut end = start;
            while end < keyed.len() && keyed[end].0 == k {
                end += 1;
            }
            buckets.insert(k, (start, end));
            start = end;
        }
        let order = keyed.into_iter().map(|(_, i)| i).collect();
        Self {
            points,
            origin,
            cell,
            order,
            buckets,
        }
    }

    fn key(&self, p: Point) -> Cell {
        (
            ((p.x - self.origin.x) / self.cell).floor() as i64,
            ((p.y - self.origin.y) / self.cell).floor() as i64,
        )
    }

    fn bucket(&self, c: Cell) -> &[usize] {
        match self.buckets.get(&c) {
            Some(&(s, e)) => &self.order[s..e],
            None => &[],
        }
    }

    /// All pairs `(i, j, d)` with `i < j` and `d = |p_i - p_j| <= r`, where
    /// the grid cell size is at least `r`.
    pub(crate) fn pairs_within(&self, r: f64) -> Vec<(u32, u32, f64)> {
        debug_assert!(self.cell >= r);
        const FORWARD: [(i64, i64); 4] = [(1, -1), (1, 0), (1, 1), (0, 1)];
        let mut out = Vec::new();
        let mut emit = |i: usize, j: usize| {
            let d = self.points[i].dist(self.points[j]);
            if d <= r {
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                out.push((a as u32, b as u32, d));
            }
        };
        for (&c, &(s, e)) in &self.buckets {
            let here = &self.order[s..e];
            for (a, &i) in here.iter().enumerate() {
                for &j in &here[a + 1..] {
                    emit(i, j);
                }
            }
            for (dx, dy) in FORWARD {
                let (Some(nx), Some(ny)) = (c.0.checked_add(dx), c.1.checked_add(dy)) else {
                    continue;
                };
                let there = self.bucket((nx, ny));
                for &i in here {
                    for &j in there {
                        emit(i, j);
                    }
                }
            }
        }
        out
    }

    /// Distance from point `q` to its `k`-th nearest other point.
    /// Requires `k < points.len()`.
    pub(crate) fn kth_neighbor_distance(&self, q: usize, k: usize) -> f64 {
        let p = self.points[q];
        let (cx, cy) = self.key(p);
        let mut best: Vec<f64> = Vec::with_capacity(k + 1);
        let n = self.points.len();
        let mut seen = 0usize;
        let mut ring: i64 = 0;
        loop {
            let mut visit = |c: Cell| {
                for &j in self.bucket(c) {
                    seen += 1;
                    if j == q {
                        continue;
                    }
                    let d = p.dist(self.points[j]);
                    if best.len() < k || d < best[k - 1] {
                        let pos = best.partition_point(|&b| b <= d);
                        best.insert(pos, d);
                        best.truncate(k);
                    }
                }
            };
            if ring == 0 {
                visit((cx, cy));
            } else {
                for dx in -ring..=ring {
                    visit((cx.saturating_add(dx), cy.saturating_sub(ring)));
                    visit((cx.saturating_add(dx), cy.saturating_add(ring)));
                }
                for dy in -ring + 1..ring {
                    visit((cx.saturating_sub(ring), cy.saturating_add(dy)));
                    visit((cx.saturating_add(ring), cy.saturating_add(dy)));
                }
            }
            // anything outside rings 0..=ring lies farther than ring·cell
            if best.len() == k && best[k - 1] <= ring as f64 * self.cell {
                return best[k - 1];
            }
            if seen >= n && best.len() == k {
                return best[k - 1];
            }
            ring += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_match_brute_force() {
        let pts: Vec<Point> = (0..300)
            .map(|i| {
                let t = i as f64;
                Point::new((t * 0.618_034).fract(), (t * 0.414_213_5).fract())
            })
            .collect();
        for r in [0.01, 0.05, 0.2, 2.0] {
            let g = Grid::new(&pts, r);
            let mut got: Vec<(u32, u32)> = g.pairs_within(r).iter().map(|e| (e.0, e.1)).collect();
            got.sort_unstable();
            let mut want = Vec::new();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    if pts[i].dist(pts[j]) <= r {
                        want.push((i as u32, j as u32));
                    }
                }
            }
            assert_eq!(got, want, "r = {r}");
        }
    }

    #[test]
    fn kth_neighbor_on_a_line() {
        let pts: Vec<Point> = [0.0, 1.0, 3.0, 7.0]
            .iter()
            .map(|&x| Point::new(x, 0.0))
            .collect();
        let g = Grid::new(&pts, 0.5);
        assert_eq!(g.kth_neighbor_distance(3, 1), 4.0);
        assert_eq!(g.kth_neighbor_distance(3, 3), 7.0);
        assert_eq!(g.kth_neighbor_distance(1, 2), 2.0);
    }
}
