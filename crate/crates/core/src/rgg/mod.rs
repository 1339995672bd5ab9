//! Geometric graphs and their critical radii.

mod connectivity;
mod grid;
mod radius;
mod union_find;

pub use connectivity::{
    is_biconnected, is_connected, k_connected_by_flow, local_vertex_connectivity,
    vertex_connectivity_at_least,
};
pub use radius::{connectivity_radius, min_degree_radius, radii, RadiusResult};
pub use union_find::UnionFind;

use std::collections::HashMap;

use crate::error::{domain, Result};
use crate::geometry::Point;
use crate::sampling::PointSet;
use grid::Grid;

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    radius: f64,
}

impl Graph {
    /// Builds a graph from an edge list; self-loops and duplicates are
    /// dropped.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        radius: f64,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            if a != b {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self { adjacency, radius }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    pub fn min_degree(&self) -> Result<usize> {
        if self.n() == 0 {
            return domain("minimum degree of an empty graph is undefined");
        }
        Ok(self.min_degree_unchecked())
    }

    pub(crate) fn min_degree_unchecked(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Copy with the vertices in `removed` deleted and the rest renumbered.
    pub fn without_vertices(&self, removed: &[usize]) -> Graph {
        let n = self.n();
        let mut keep = vec![true; n];
        for &v in removed {
            keep[v] = false;
        }
        let mut map = vec![usize::MAX; n];
        let mut m = 0;
        for v in 0..n {
            if keep[v] {
                map[v] = m;
                m += 1;
            }
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| keep[a] && keep[b])
            .map(|(a, b)| (map[a], map[b]));
        Graph::from_edges(m, edges, self.radius)
    }
}

/// Convenience wrapper over [`min_degree`](Graph::min_degree).
pub fn min_degree(g: &Graph) -> Result<usize> {
    g.min_degree()
}

/// All pairs at distance `<= r` as `(i, j, d)` with `i < j`.
pub fn pairs_within(points: &[Point], r: f64) -> Vec<(u32, u32, f64)> {
    if points.len() < 2 {
        return Vec::new();
    }
    if r > 0.0 && r.is_finite() {
        return Grid::new(points, r).pairs_within(r);
    }
    if r.is_infinite() && r > 0.0 {
        let mut out = Vec::new();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                out.push((i as u32, j as u32, points[i].dist(points[j])));
            }
        }
        return out;
    }
    // r == 0: only coincident points are adjacent
    let mut groups: HashMap<(u64, u64), Vec<u32>> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        // +0.0 so that -0.0 and 0.0 share a key
        groups
            .entry(((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits()))
            .or_default()
            .push(i as u32);
    }
    let mut out = Vec::new();
    for g in groups.values() {
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                out.push((g[a].min(g[b]), g[a].max(g[b]), 0.0));
            }
        }
    }
    out
}

/// Geometric graph with the closed threshold `|p_i - p_j| <= r`.
pub fn build_graph(points: &PointSet, r: f64) -> Result<Graph> {
    if !(r >= 0.0) {
        return domain(format!("graph radius must be >= 0, got {r}"));
    }
    let edges = pairs_within(&points.points, r);
    Ok(Graph::from_edges(
        points.len(),
        edges.into_iter().map(|(a, b, _)| (a as usize, b as usize)),
        r,
    ))
}
