//! Vertex-connectivity decisions.
//!
//! `κ(G) >= k` is decided by dedicated linear-time routines for `k = 1`
//! (reachability) and `k = 2` (no articulation point), and by a Menger
//! sweep with unit vertex capacities for larger `k`.

use std::collections::VecDeque;

use super::Graph;
use crate::error::{domain, Result};

pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

/// True iff the graph is connected and has no articulation point
/// (Hopcroft-Tarjan lowpoints, iterative DFS).
pub fn is_biconnected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    let mut root_children = 0;
    while let Some(top) = stack.last_mut() {
        let (v, parent, idx) = *top;
        let nbrs = g.neighbors(v);
        if idx < nbrs.len() {
            top.2 += 1;
            let u = nbrs[idx];
            if disc[u] == UNSEEN {
                disc[u] = time;
                low[u] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((u, v, 0));
            } else if u != parent {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    return false;
                }
            }
        }
    }
    time == n && root_children == 1
}

/// Unit-vertex-capacity flow network on the split graph `v -> (v_in, v_out)`.
struct SplitNetwork {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

const NIL: usize = usize::MAX;

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut net = SplitNetwork {
            head: vec![NIL; 2 * n],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
            for &u in g.neighbors(v) {
                net.arc(2 * v + 1, 2 * u, 1);
            }
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        for (a, b, c) in [(from, to, cap), (to, from, 0)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    /// Number of internally vertex-disjoint `s`-`t` paths, capped at `limit`.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let original: Vec<i32> = self.cap.clone();
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        let mut pred = vec![NIL; self.head.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = NIL);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                let mut e = self.head[x];
                while e != NIL {
                    let y = self.to[e];
                    if self.cap[e] > 0 && y != source && pred[y] == NIL {
                        pred[y] = e;
                        if y == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                    e = self.next[e];
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != source {
                let e = pred[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        self.cap = original;
        flow
    }
}

/// Local vertex connectivity between two distinct non-adjacent vertices,
/// capped at `limit`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    SplitNetwork::new(g).local_connectivity(s, t, limit)
}

/// Menger sweep: with `|V| > k`, `G` is k-connected iff each of `k` fixed
/// vertices has `k` vertex-disjoint paths to every vertex it is not adjacent
/// to. A separator of size `< k` misses at least one of the fixed vertices,
/// and that vertex fails against some vertex on the far side.
pub fn k_connected_by_flow(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    if g.min_degree_unchecked() < k {
        return false;
    }
    let mut net = SplitNetwork::new(g);
    let mut adjacent = vec![false; n];
    for s in 0..k {
        for &u in g.neighbors(s) {
            adjacent[u] = true;
        }
        for (t, &adj) in adjacent.iter().enumerate() {
            if t == s || adj {
                continue;
            }
            if net.local_connectivity(s, t, k) < k {
                return false;
            }
        }
        for &u in g.neighbors(s) {
            adjacent[u] = false;
        }
    }
    true
}

/// `κ(G) >= k`. A graph on `n <= k` vertices is never k-connected.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> Result<bool> {
    if k < 1 {
        return domain("vertex connectivity order k must be >= 1");
    }
    Ok(k_connected_unchecked(g, k))
}

pub(crate) fn k_connected_unchecked(g: &Graph, k: usize) -> bool {
    if g.n() <= k {
        return false;
    }
    match k {
        1 => is_connected(g),
        2 => is_biconnected(g),
        _ => k_connected_by_flow(g, k),
    }
}
