//! Small bipartite graphs stored as per-X-vertex neighbor bitsets.
//!
//! Vertices are `X(i)` for `i < p` and `Y(j)` for `j < q`. Both sides are
//! capped at [`MAX_SIDE`] so that every neighborhood fits in one `u64`.

mod canon;
mod enumerate;

pub use canon::{canonical_columns, CanonicalKey};
pub use enumerate::{enumerate_connected, enumerate_shard, shards, ConnectedBigraphs, ShardId, ShardIter};

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::partition::{Partition, PartitionError};

pub const MAX_SIDE: usize = 64;

/// Ratio `|E| / (p q)` at or above which a degree-2 cut vertex is enough
/// for Ferrers-goodness: 0.544 held exactly.
pub const KOO_DENSITY: (u64, u64) = (68, 125);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({x},{y}) is out of range for a {p}x{q} bipartite graph")]
    EdgeOutOfRange { x: usize, y: usize, p: usize, q: usize },
    #[error("edge ({x},{y}) is listed twice")]
    DuplicateEdge { x: usize, y: usize },
    #[error("row {row} references a Y vertex outside 0..{q}")]
    RowOutOfRange { row: usize, q: usize },
    #[error("a side of {size} vertices exceeds the limit of {MAX_SIDE}")]
    TooLarge { size: usize },
    #[error("cannot build a Ferrers graph from the empty partition")]
    EmptyPartition,
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} does not exist")]
    InvalidVertex(Vertex),
    #[error("enumeration needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("cycle length {0} is not an even number >= 4")]
    BadCycle(usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    X(usize),
    Y(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::X(i) => write!(f, "x{i}"),
            Vertex::Y(j) => write!(f, "y{j}"),
        }
    }
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    p: usize,
    q: usize,
    adj: Vec<u64>,
}

impl BipartiteGraph {
    pub fn empty(p: usize, q: usize) -> Result<Self, GraphError> {
        check_side(p)?;
        check_side(q)?;
        Ok(Self { p, q, adj: vec![0; p] })
    }

    /// Builds a graph from X-neighborhood bitsets over `0..q`.
    pub fn from_rows(q: usize, rows: Vec<u64>) -> Result<Self, GraphError> {
        check_side(rows.len())?;
        check_side(q)?;
        if let Some(row) = rows.iter().position(|&r| r & !low_bits(q) != 0) {
            return Err(GraphError::RowOutOfRange { row, q });
        }
        Ok(Self { p: rows.len(), q, adj: rows })
    }

    pub fn from_edges(p: usize, q: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(p, q)?;
        for &(x, y) in edges {
            if x >= p || y >= q {
                return Err(GraphError::EdgeOutOfRange { x, y, p, q });
            }
            if g.has_edge(x, y) {
                return Err(GraphError::DuplicateEdge { x, y });
            }
            g.adj[x] |= 1 << y;
        }
        Ok(g)
    }

    /// The Ferrers graph of a partition: `x_i ~ y_j` iff `j < lam[i]`.
    pub fn ferrers_from_partition(lam: &Partition) -> Result<Self, GraphError> {
        if lam.is_empty() {
            return Err(GraphError::EmptyPartition);
        }
        let q = lam.largest() as usize;
        check_side(q)?;
        let rows = lam.parts().iter().map(|&d| low_bits(d as usize)).collect();
        Self::from_rows(q, rows)
    }

    pub fn complete(p: usize, q: usize) -> Result<Self, GraphError> {
        check_side(q)?;
        Self::from_rows(q, vec![low_bits(q); p])
    }

    /// Path on `n` vertices; X takes the even positions along the path.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let (p, q) = (n.div_ceil(2), n / 2);
        let mut edges = Vec::with_capacity(n - 1);
        for pos in 0..n - 1 {
            let (x, y) = if pos % 2 == 0 { (pos / 2, pos / 2) } else { (pos / 2 + 1, pos / 2) };
            edges.push((x, y));
        }
        Self::from_edges(p, q, &edges)
    }

    /// The even cycle with `len` vertices.
    pub fn cycle(len: usize) -> Result<Self, GraphError> {
        if len < 4 || !len.is_multiple_of(2) {
            return Err(GraphError::BadCycle(len));
        }
        let k = len / 2;
        let edges: Vec<_> = (0..k).flat_map(|i| [(i, i), ((i + 1) % k, i)]).collect();
        Self::from_edges(k, k, &edges)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn order(&self) -> usize {
        self.p + self.q
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn row(&self, x: usize) -> u64 {
        self.adj[x]
    }

    /// Neighbors of `y_j` as a bitset over X.
    pub fn column(&self, y: usize) -> u64 {
        self.adj.iter().enumerate().filter(|(_, r)| (*r >> y) & 1 == 1).fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn columns(&self) -> Vec<u64> {
        let mut cols = vec![0u64; self.q];
        for (i, &r) in self.adj.iter().enumerate() {
            for (j, c) in cols.iter_mut().enumerate() {
                *c |= ((r >> j) & 1) << i;
            }
        }
        cols
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        (self.adj[x] >> y) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Edges as `(x, y)` pairs in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, &r)| (0..64).filter(move |&j| (r >> j) & 1 == 1).map(move |j| (i, j)))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match v {
            Vertex::X(i) => i < self.p,
            Vertex::Y(j) => j < self.q,
        }
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        match v {
            Vertex::X(i) => self.adj[i].count_ones(),
            Vertex::Y(j) => self.adj.iter().filter(|r| (*r >> j) & 1 == 1).count() as u32,
        }
    }

    pub fn x_degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|r| r.count_ones()).collect()
    }

    pub fn y_degrees(&self) -> Vec<u32> {
        self.columns().iter().map(|c| c.count_ones()).collect()
    }

    /// X-degrees and Y-degrees, each sorted descending. Isolated vertices
    /// show up as trailing zeros.
    pub fn degrees(&self) -> (Vec<u32>, Vec<u32>) {
        let mut xs = self.x_degrees();
        let mut ys = self.y_degrees();
        xs.sort_unstable_by(|a, b| b.cmp(a));
        ys.sort_unstable_by(|a, b| b.cmp(a));
        (xs, ys)
    }

    /// Degrees of all `p + q` vertices as one partition (zeros dropped).
    pub fn degree_partition(&self) -> Partition {
        Partition::from_multiset(self.x_degrees().into_iter().chain(self.y_degrees()))
    }

    /// Swaps the roles of the two sides.
    pub fn transpose(&self) -> Self {
        Self { p: self.q, q: self.p, adj: self.columns() }
    }

    /// Relabels `x_i -> x_{xs[i]}` and `y_j -> y_{ys[j]}`.
    pub fn relabel(&self, xs: &[usize], ys: &[usize]) -> Self {
        assert_eq!(xs.len(), self.p);
        assert_eq!(ys.len(), self.q);
        let mut adj = vec![0u64; self.p];
        for (i, &r) in self.adj.iter().enumerate() {
            let mut row = 0u64;
            for (j, &to) in ys.iter().enumerate() {
                row |= ((r >> j) & 1) << to;
            }
            adj[xs[i]] = row;
        }
        Self { p: self.p, q: self.q, adj }
    }

    fn index(&self, v: Vertex) -> usize {
        match v {
            Vertex::X(i) => i,
            Vertex::Y(j) => self.p + j,
        }
    }

    fn vertex(&self, idx: usize) -> Vertex {
        if idx < self.p {
            Vertex::X(idx)
        } else {
            Vertex::Y(idx - self.p)
        }
    }

    /// Single-vertex graphs count as connected.
    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.order() == 0 {
            return Err(GraphError::Empty);
        }
        Ok(self.reach_all())
    }

    fn reach_all(&self) -> bool {
        let all_x = low_bits(self.p);
        let all_y = low_bits(self.q);
        let cols = self.columns();
        let (mut rx, mut ry) = if self.p > 0 { (1u64, 0u64) } else { (0, 1) };
        loop {
            let ny = ry | self.adj.iter().enumerate().filter(|(i, _)| (rx >> i) & 1 == 1).fold(0, |a, (_, r)| a | r);
            let nx = rx | cols.iter().enumerate().filter(|(j, _)| (ny >> j) & 1 == 1).fold(0, |a, (_, c)| a | c);
            if nx == rx && ny == ry {
                break;
            }
            rx = nx;
            ry = ny;
        }
        rx == all_x && ry == all_y
    }

    fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected()? {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Articulation points, sorted (X before Y).
    pub fn cut_vertices(&self) -> Result<Vec<Vertex>, GraphError> {
        self.require_connected()?;
        let n = self.order();
        let cols = self.columns();
        let mut state = LowLink { disc: vec![usize::MAX; n], low: vec![0; n], cut: vec![false; n], timer: 0 };
        state.visit(self, &cols, 0, None);
        Ok((0..n).filter(|&i| state.cut[i]).map(|i| self.vertex(i)).collect())
    }

    fn neighbors_of(&self, cols: &[u64], idx: usize) -> u64 {
        if idx < self.p {
            self.adj[idx]
        } else {
            cols[idx - self.p]
        }
    }

    /// Connected, at least two vertices, and no cut vertex. `K2` qualifies.
    pub fn is_biconnected(&self) -> bool {
        self.order() >= 2
            && self.is_connected().unwrap_or(false)
            && self.cut_vertices().map(|c| c.is_empty()).unwrap_or(false)
    }

    /// Searches edge pairs directly for an induced `2K2`.
    pub fn has_induced_2k2(&self) -> bool {
        let edges: Vec<_> = self.edges().collect();
        for (k, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[k + 1..] {
                if a != c && b != d && !self.has_edge(a, d) && !self.has_edge(c, b) {
                    return true;
                }
            }
        }
        false
    }

    /// X-neighborhoods form a chain under inclusion.
    pub fn is_ferrers(&self) -> bool {
        let mut rows = self.adj.clone();
        rows.sort_unstable_by_key(|r| r.count_ones());
        rows.windows(2).all(|w| w[0] & !w[1] == 0)
    }

    /// The X-degree partition is the conjugate of the Y-degree partition.
    pub fn has_conjugate_degrees(&self) -> bool {
        let xs = Partition::from_multiset(self.x_degrees());
        let ys = Partition::from_multiset(self.y_degrees());
        xs == ys.conjugate()
    }

    /// Identifies `x1` of `self` with `x2` of `other`. The merged vertex
    /// keeps index `x1`; the other X vertices of `other` follow those of
    /// `self` in order, and its Y vertices are shifted by `self.q()`.
    pub fn glue_at_vertex(&self, x1: usize, other: &Self, x2: usize) -> Result<Self, GraphError> {
        if x1 >= self.p {
            return Err(GraphError::InvalidVertex(Vertex::X(x1)));
        }
        if x2 >= other.p {
            return Err(GraphError::InvalidVertex(Vertex::X(x2)));
        }
        let q = self.q + other.q;
        check_side(q)?;
        check_side(self.p + other.p - 1)?;
        let mut rows = self.adj.clone();
        rows[x1] |= other.adj[x2] << self.q;
        rows.extend(other.adj.iter().enumerate().filter(|&(i, _)| i != x2).map(|(_, &r)| r << self.q));
        Self::from_rows(q, rows)
    }

    /// Disjoint union plus the edge `x_u -- y_v` where `y_v` lives in `other`.
    pub fn join_by_edge(&self, u: usize, other: &Self, v: usize) -> Result<Self, GraphError> {
        if u >= self.p {
            return Err(GraphError::InvalidVertex(Vertex::X(u)));
        }
        if v >= other.q {
            return Err(GraphError::InvalidVertex(Vertex::Y(v)));
        }
        let q = self.q + other.q;
        check_side(q)?;
        check_side(self.p + other.p)?;
        let mut rows = self.adj.clone();
        rows[u] |= 1 << (self.q + v);
        rows.extend(other.adj.iter().map(|&r| r << self.q));
        Self::from_rows(q, rows)
    }

    /// A cut vertex of degree 2 together with edge density at least 0.544.
    pub fn koo_condition(&self) -> Result<bool, GraphError> {
        let cuts = self.cut_vertices()?;
        let has_deg2_cut = cuts.iter().any(|&v| self.degree(v) == 2);
        let density = Ratio::new(self.edge_count() as u64, (self.p * self.q) as u64);
        Ok(has_deg2_cut && density >= Ratio::new(KOO_DENSITY.0, KOO_DENSITY.1))
    }

    pub fn canonical_key(&self) -> Result<CanonicalKey, GraphError> {
        self.require_connected()?;
        Ok(canon::key_of(self))
    }

    /// The representative whose column-major encoding is the canonical key.
    /// The smaller side is X.
    pub fn canonical_form(&self) -> Result<Self, GraphError> {
        Ok(self.canonical_key()?.to_graph())
    }
}

fn check_side(n: usize) -> Result<(), GraphError> {
    if n > MAX_SIDE {
        Err(GraphError::TooLarge { size: n })
    } else {
        Ok(())
    }
}

struct LowLink {
    disc: Vec<usize>,
    low: Vec<usize>,
    cut: Vec<bool>,
    timer: usize,
}

impl LowLink {
    fn visit(&mut self, g: &BipartiteGraph, cols: &[u64], u: usize, parent: Option<usize>) {
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        self.timer += 1;
        let mut children = 0;
        let mut nbrs = g.neighbors_of(cols, u);
        let offset = if u < g.p { g.p } else { 0 };
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize + offset;
            nbrs &= nbrs - 1;
            if self.disc[v] == usize::MAX {
                children += 1;
                self.visit(g, cols, v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if parent.is_some() && self.low[v] >= self.disc[u] {
                    self.cut[u] = true;
                }
            } else if Some(v) != parent {
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cut[u] = true;
        }
    }
}

impl BipartiteGraph {
    /// Vertex ids in `0..p+q` (X first) mapped back to [`Vertex`].
    pub fn vertex_at(&self, idx: usize) -> Option<Vertex> {
        (idx < self.order()).then(|| self.vertex(idx))
    }

    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.contains(v).then(|| self.index(v))
    }
}
