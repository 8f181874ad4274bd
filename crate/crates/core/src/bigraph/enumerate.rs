//! Isomorph-free generation of connected bipartite graphs.
//!
//! For each split `p <= q` of `n`, candidates are nondecreasing sequences of
//! `q` nonzero `p`-bit column values (the Y-neighborhoods, row 0 most
//! significant). A candidate is emitted iff it is connected and is already
//! its own canonical arrangement, so each isomorphism class appears once.
//! Shards are keyed by `p` and the first two columns; within a shard the
//! stream follows the column sequences in lexicographic order.

use alloc::vec::Vec;

use super::canon::{canonical_columns, columns_msb, is_least, rows_of};
use super::{low_bits, BipartiteGraph, GraphError};

/// Largest vertex count the generator accepts.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShardId {
    pub p: usize,
    pub first: u64,
    pub second: Option<u64>,
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge { size: n });
    }
    Ok(())
}

/// Every shard of level `n`, in stream order. Some shards may be empty.
pub fn shards(n: usize) -> Result<Vec<ShardId>, GraphError> {
    check_order(n)?;
    let mut out = Vec::new();
    for p in 1..=n / 2 {
        let q = n - p;
        for first in 1..=low_bits(p) {
            if q == 1 {
                out.push(ShardId { p, first, second: None });
            } else {
                out.extend((first..=low_bits(p)).map(|second| ShardId { p, first, second: Some(second) }));
            }
        }
    }
    Ok(out)
}

pub fn enumerate_shard(n: usize, shard: ShardId, require_biconnected: bool) -> Result<ShardIter, GraphError> {
    check_order(n)?;
    let p = shard.p;
    if p == 0 || p > n / 2 {
        return Err(GraphError::TooFewVertices(p));
    }
    let q = n - p;
    let mut fixed = alloc::vec![shard.first];
    fixed.extend(shard.second);
    let floor = *fixed.last().expect("nonempty");
    let values: Vec<u64> = (floor..=low_bits(p)).collect();
    let free = q.saturating_sub(fixed.len());
    let done = fixed.len() > q
        || fixed.iter().any(|&c| c == 0 || c > low_bits(p))
        || shard.second.is_some_and(|s| s < shard.first);
    Ok(ShardIter { p, q, fixed, values, idx: alloc::vec![0; free], done, require_biconnected })
}

pub fn enumerate_connected(n: usize, require_biconnected: bool) -> Result<ConnectedBigraphs, GraphError> {
    let shards = shards(n)?;
    Ok(ConnectedBigraphs { n, require_biconnected, shards: shards.into_iter(), current: None })
}

/// Walks one shard in odometer order over nondecreasing tails.
#[derive(Debug, Clone)]
pub struct ShardIter {
    p: usize,
    q: usize,
    fixed: Vec<u64>,
    values: Vec<u64>,
    idx: Vec<usize>,
    done: bool,
    require_biconnected: bool,
}

impl ShardIter {
    fn advance(&mut self) {
        let last = self.values.len() - 1;
        match self.idx.iter().rposition(|&i| i < last) {
            Some(pos) => {
                let v = self.idx[pos] + 1;
                for i in &mut self.idx[pos..] {
                    *i = v;
                }
            }
            None => self.done = true,
        }
    }

    fn candidate(&self) -> Vec<u64> {
        let mut cols = self.fixed.clone();
        cols.extend(self.idx.iter().map(|&i| self.values[i]));
        cols
    }

    fn accept(&self, cols: &[u64]) -> Option<BipartiteGraph> {
        if !columns_connected(self.p, cols) || !is_least(self.p, cols) {
            return None;
        }
        let g = graph_from_columns(self.p, cols);
        if self.p == self.q {
            let t = canonical_columns(self.p, &columns_msb(&g.transpose()));
            if rows_of(self.p, &t) < rows_of(self.p, cols) {
                return None;
            }
        }
        if self.require_biconnected && !g.is_biconnected() {
            return None;
        }
        Some(g)
    }
}

impl Iterator for ShardIter {
    type Item = BipartiteGraph;

    fn next(&mut self) -> Option<BipartiteGraph> {
        while !self.done {
            let cols = self.candidate();
            self.advance();
            if let Some(g) = self.accept(&cols) {
                return Some(g);
            }
        }
        None
    }
}

fn columns_connected(p: usize, cols: &[u64]) -> bool {
    let mut reached = cols[0];
    let mut seen = 1u64;
    loop {
        let mut grew = false;
        for (j, &c) in cols.iter().enumerate() {
            if (seen >> j) & 1 == 0 && c & reached != 0 {
                seen |= 1 << j;
                reached |= c;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    reached == low_bits(p) && seen == low_bits(cols.len())
}

fn graph_from_columns(p: usize, cols: &[u64]) -> BipartiteGraph {
    let mut rows = alloc::vec![0u64; p];
    for (j, &c) in cols.iter().enumerate() {
        for (i, r) in rows.iter_mut().enumerate() {
            *r |= ((c >> (p - 1 - i)) & 1) << j;
        }
    }
    BipartiteGraph::from_rows(cols.len(), rows).expect("sizes checked")
}

/// All shards of a level chained in order.
#[derive(Debug, Clone)]
pub struct ConnectedBigraphs {
    n: usize,
    require_biconnected: bool,
    shards: alloc::vec::IntoIter<ShardId>,
    current: Option<ShardIter>,
}

impl Iterator for ConnectedBigraphs {
    type Item = BipartiteGraph;

    fn next(&mut self) -> Option<BipartiteGraph> {
        loop {
            if let Some(it) = self.current.as_mut() {
                if let Some(g) = it.next() {
                    return Some(g);
                }
            }
            let shard = self.shards.next()?;
            self.current =
                Some(enumerate_shard(self.n, shard, self.require_biconnected).expect("shard ids come from shards()"));
        }
    }
}
