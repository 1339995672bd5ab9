//! Brute-force oracles shared by the graph tests and the acceptance run.
#![allow(dead_code)]

use rand::Rng;
use rgg_core::rgg::{Graph, UnionFind};
use rgg_core::Point;

fn connected_without(g: &Graph, removed: &[bool]) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// `κ(G) >= k` by deleting every vertex subset of size `< k`.
pub fn k_connected_exhaustive(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    assert!(n < 20);
    for mask in 0u32..(1 << n) {
        if (mask.count_ones() as usize) < k {
            let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            if !connected_without(g, &removed) {
                return false;
            }
        }
    }
    true
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges, 1.0)
}

/// Largest k-th nearest neighbor distance by sorting every row.
pub fn min_degree_radius_brute(pts: &[Point], k: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, p) in pts.iter().enumerate() {
        let mut d: Vec<f64> = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| p.dist(*q))
            .collect();
        d.sort_by(f64::total_cmp);
        worst = worst.max(d[k - 1]);
    }
    worst
}

/// All pairs sorted by distance.
pub fn sorted_pairs(pts: &[Point]) -> Vec<(usize, usize, f64)> {
    let mut e = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            e.push((i, j, pts[i].dist(pts[j])));
        }
    }
    e.sort_by(|a, b| a.2.total_cmp(&b.2));
    e
}

/// Longest edge of a minimum spanning tree.
pub fn mst_longest_edge(pts: &[Point]) -> f64 {
    let mut uf = UnionFind::new(pts.len());
    let mut longest = 0.0;
    for (a, b, d) in sorted_pairs(pts) {
        if uf.union(a, b) {
            longest = d;
        }
    }
    longest
}

/// First pairwise distance, scanning upward, at which `test` holds.
pub fn first_radius_where(pts: &[Point], test: impl Fn(&Graph) -> bool) -> f64 {
    let pairs = sorted_pairs(pts);
    let mut edges = Vec::new();
    let mut i = 0;
    if test(&Graph::from_edges(pts.len(), Vec::new(), 0.0)) {
        return 0.0;
    }
    while i < pairs.len() {
        let d = pairs[i].2;
        while i < pairs.len() && pairs[i].2 == d {
            edges.push((pairs[i].0, pairs[i].1));
            i += 1;
        }
        if test(&Graph::from_edges(pts.len(), edges.clone(), d)) {
            return d;
        }
    }
    f64::INFINITY
}
