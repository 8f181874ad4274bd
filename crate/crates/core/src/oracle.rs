//! Brute-force reference implementations used only by unit tests.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bigraph::BipartiteGraph;

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, k - 1);
            out.push(p);
        }
    }
    out
}

/// Adjacency lists over global ids (X first, then Y).
pub fn adjacency(g: &BipartiteGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (x, y) in g.edges() {
        adj[x].push(g.p() + y);
        adj[g.p() + y].push(x);
    }
    adj
}

/// Connectivity of the graph with `removed` deleted.
pub fn connected_without(g: &BipartiteGraph, removed: Option<usize>) -> bool {
    let adj = adjacency(g);
    let alive: Vec<usize> = (0..g.order()).filter(|&v| Some(v) != removed).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] && Some(v) != removed {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

pub fn cut_vertices(g: &BipartiteGraph) -> Vec<usize> {
    (0..g.order()).filter(|&v| !connected_without(g, Some(v))).collect()
}

/// Minimum row-major encoding over every relabeling of both sides.
pub fn brute_key(g: &BipartiteGraph) -> (usize, usize, Vec<u64>) {
    let g = if g.p() > g.q() { g.transpose() } else { g.clone() };
    let mut cands = vec![g.clone()];
    if g.p() == g.q() {
        cands.push(g.transpose());
    }
    let xp = permutations(g.p());
    let yp = permutations(g.q());
    let mut best: Option<Vec<u64>> = None;
    for c in &cands {
        for xs in &xp {
            for ys in &yp {
                let rows = c.relabel(xs, ys).rows().to_vec();
                if best.as_ref().is_none_or(|b| rows < *b) {
                    best = Some(rows);
                }
            }
        }
    }
    (g.p(), g.q(), best.unwrap_or_default())
}

/// Isomorphism classes of connected bipartite graphs on `n` vertices,
/// found by walking every labeled 2-colored graph.
pub fn brute_classes(n: usize, biconnected_only: bool) -> BTreeSet<(usize, usize, Vec<u64>)> {
    let mut out = BTreeSet::new();
    for p in 1..=n / 2 {
        let q = n - p;
        for mask in 0u64..(1 << (p * q)) {
            let rows: Vec<u64> = (0..p).map(|i| (mask >> (i * q)) & ((1 << q) - 1)).collect();
            let g = BipartiteGraph::from_rows(q, rows).unwrap();
            if !connected_without(&g, None) {
                continue;
            }
            if biconnected_only && !cut_vertices(&g).is_empty() {
                continue;
            }
            out.insert(brute_key(&g));
        }
    }
    out
}

/// Counts spanning trees by checking every `(n-1)`-subset of edges.
pub fn brute_tree_count(g: &BipartiteGraph) -> u64 {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().map(|(x, y)| (x, g.p() + y)).collect();
    if n <= 1 {
        return 1;
    }
    let m = edges.len();
    let mut count = 0;
    for mask in 0u64..(1 << m) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut acyclic = true;
        for (k, &(a, b)) in edges.iter().enumerate() {
            if (mask >> k) & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    acyclic = false;
                    break;
                }
                parent[ra] = rb;
            }
        }
        if acyclic {
            count += 1;
        }
    }
    count
}
