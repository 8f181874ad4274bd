//! Text formats: graph JSON, graph6 with a side mask, partitions and
//! exact numbers.

use std::collections::VecDeque;
use std::str::FromStr;

use ferrers_core::exact::ExactRational;
use ferrers_core::{BipartiteGraph, Partition};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("graph: {0}")]
    Graph(#[from] ferrers_core::GraphError),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("partition: {0}")]
    Partition(#[from] ferrers_core::partition::PartitionError),
    #[error("rational: {0:?}")]
    Rational(String),
}

/// `{"p": 2, "q": 2, "edges": [[0,0],[0,1]]}`; edge `[i, j]` joins `x_i` and
/// `y_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub p: usize,
    pub q: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&BipartiteGraph> for GraphJson {
    fn from(g: &BipartiteGraph) -> Self {
        Self { p: g.p(), q: g.q(), edges: g.edges().collect() }
    }
}

impl TryFrom<GraphJson> for BipartiteGraph {
    type Error = FormatError;

    fn try_from(j: GraphJson) -> Result<Self, FormatError> {
        Ok(BipartiteGraph::from_edges(j.p, j.q, &j.edges)?)
    }
}

pub fn parse_graph_json(s: &str) -> Result<BipartiteGraph, FormatError> {
    serde_json::from_str::<GraphJson>(s)?.try_into()
}

pub fn graph_to_json(g: &BipartiteGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("plain data serializes")
}

fn g6_size(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![126, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]
    }
}

/// graph6 of the graph with vertices `x_0..x_{p-1}, y_0..y_{q-1}` in that
/// order, followed by `:` and a side mask (`0` = X, `1` = Y).
pub fn to_graph6(g: &BipartiteGraph) -> String {
    let n = g.order();
    let adjacent = |i: usize, j: usize| {
        let (lo, hi) = (i.min(j), i.max(j));
        lo < g.p() && hi >= g.p() && g.has_edge(lo, hi - g.p())
    };
    let mut bytes = g6_size(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adjacent(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    let mut out = String::from_utf8(bytes).expect("graph6 is printable ASCII");
    out.push(':');
    out.extend((0..n).map(|v| if v < g.p() { '0' } else { '1' }));
    out
}

fn g6_decode(s: &str) -> Result<(usize, Vec<Vec<usize>>), FormatError> {
    let err = |m: &str| FormatError::Graph6(m.into());
    let bytes = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    if bytes.iter().any(|b| !(63..=126).contains(b)) {
        return Err(err("characters outside ?..~"));
    }
    let (n, body) = match bytes {
        [126, 126, ..] => return Err(err("sizes above 258047 are not supported")),
        [126, a, b, c, rest @ ..] => {
            ((((a - 63) as usize) << 12) | (((b - 63) as usize) << 6) | (c - 63) as usize, rest)
        }
        [126, ..] => return Err(err("truncated size")),
        [a, rest @ ..] => ((a - 63) as usize, rest),
        [] => return Err(err("empty string")),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(err("body length does not match the vertex count"));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    Ok((n, adj))
}

/// Two-colours each component from its least vertex, which goes to X.
fn two_colouring(n: usize, adj: &[Vec<usize>]) -> Result<Vec<bool>, FormatError> {
    let mut side: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].expect("queued vertices are coloured");
            for &w in &adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return Err(FormatError::Graph6("graph is not bipartite".into())),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(|s| s.unwrap_or(false)).collect())
}

/// Parses `G6` or `G6:MASK`. Without a mask the sides come from a
/// two-colouring. X and Y keep the relative order of the graph6 vertices.
pub fn from_graph6(s: &str) -> Result<BipartiteGraph, FormatError> {
    let s = s.trim();
    let (g6, mask) = match s.split_once(':') {
        Some((g, m)) => (g, Some(m)),
        None => (s, None),
    };
    let (n, adj) = g6_decode(g6)?;
    let is_y: Vec<bool> = match mask {
        Some(m) => {
            if m.len() != n || m.bytes().any(|c| c != b'0' && c != b'1') {
                return Err(FormatError::Graph6(format!("mask must be {n} characters of 0/1")));
            }
            m.bytes().map(|c| c == b'1').collect()
        }
        None => two_colouring(n, &adj)?,
    };
    let mut index = vec![0; n];
    let (mut p, mut q) = (0, 0);
    for v in 0..n {
        if is_y[v] {
            index[v] = q;
            q += 1;
        } else {
            index[v] = p;
            p += 1;
        }
    }
    let mut edges = Vec::new();
    for (v, nbrs) in adj.iter().enumerate() {
        for &w in nbrs {
            if is_y[v] == is_y[w] {
                return Err(FormatError::Graph6(format!("edge {v}-{w} lies inside one side of the mask")));
            }
            if !is_y[v] {
                edges.push((index[v], index[w]));
            }
        }
    }
    Ok(BipartiteGraph::from_edges(p, q, &edges)?)
}

/// Always `num/den`, including `4/1`.
pub fn rational_to_string(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den` or a plain integer.
pub fn parse_rational(s: &str) -> Result<ExactRational, FormatError> {
    let s = s.trim();
    let bad = || FormatError::Rational(s.into());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(ExactRational::new(n, d))
        }
        None => Ok(ExactRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn parse_partition(s: &str) -> Result<Partition, FormatError> {
    Ok(s.parse()?)
}

/// Comma-separated rationals, e.g. `5/2,2,1`.
pub fn parse_rational_list(s: &str) -> Result<Vec<ExactRational>, FormatError> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_rational).collect()
}
