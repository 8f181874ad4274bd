//! Canonical keys for connected bipartite graphs.
//!
//! A graph is viewed as an `s x m` 0/1 matrix with the smaller side (`s`
//! vertices) as rows. The key is the lexicographically least row-major
//! encoding over all row and column permutations, plus the transpose when
//! both sides have equal size. Rows are read as `m`-bit strings with column 0
//! first.
//!
//! For a fixed row order the best column order is the one that sorts the
//! columns read top-down as integers (row 0 most significant), so only row
//! permutations are searched. Rows are placed one at a time; placing row `r`
//! never disturbs rows `0..r` of the column-sorted matrix, so a branch is
//! dropped as soon as its placed rows compare greater than the incumbent's.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::BipartiteGraph;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        Self(bytes)
    }

    fn encode(m: usize, rows: &[u64]) -> Self {
        let width = m.div_ceil(8);
        let mut out = Vec::with_capacity(2 + width * rows.len());
        out.push(rows.len() as u8);
        out.push(m as u8);
        for &r in rows {
            out.extend_from_slice(&r.to_be_bytes()[8 - width..]);
        }
        Self(out)
    }

    /// Rebuilds the canonical representative (smaller side as X).
    pub fn to_graph(&self) -> BipartiteGraph {
        let s = self.0[0] as usize;
        let m = self.0[1] as usize;
        let width = m.div_ceil(8);
        let adj = (0..s)
            .map(|i| {
                let mut buf = [0u8; 8];
                buf[8 - width..].copy_from_slice(&self.0[2 + i * width..2 + (i + 1) * width]);
                let r = u64::from_be_bytes(buf);
                // column 0 is the most significant of the m bits
                (0..m).fold(0u64, |acc, j| acc | (((r >> (m - 1 - j)) & 1) << j))
            })
            .collect();
        BipartiteGraph::from_rows(m, adj).expect("key sizes are within limits")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CanonicalKey(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

/// Columns of `g` read over the X side, row 0 most significant.
pub(crate) fn columns_msb(g: &BipartiteGraph) -> Vec<u64> {
    let p = g.p();
    g.columns().into_iter().map(|c| (0..p).fold(0u64, |acc, i| acc | (((c >> i) & 1) << (p - 1 - i)))).collect()
}

/// Row-major view of sorted columns: row `i` as an `m`-bit string, column
/// 0 most significant.
pub(crate) fn rows_of(s: usize, sorted_cols: &[u64]) -> Vec<u64> {
    let m = sorted_cols.len();
    (0..s)
        .map(|i| {
            sorted_cols.iter().enumerate().fold(0u64, |acc, (j, &c)| acc | (((c >> (s - 1 - i)) & 1) << (m - 1 - j)))
        })
        .collect()
}

pub(crate) fn key_of(g: &BipartiteGraph) -> CanonicalKey {
    let (p, q) = (g.p(), g.q());
    let s = p.min(q);
    let cols = match p.cmp(&q) {
        Ordering::Less => canonical_columns(p, &columns_msb(g)),
        Ordering::Greater => canonical_columns(q, &columns_msb(&g.transpose())),
        Ordering::Equal => {
            let a = canonical_columns(p, &columns_msb(g));
            let b = canonical_columns(q, &columns_msb(&g.transpose()));
            if rows_of(s, &b) < rows_of(s, &a) {
                b
            } else {
                a
            }
        }
    };
    CanonicalKey::encode(p.max(q), &rows_of(s, &cols))
}

/// Sorted columns of the canonical arrangement of an `s`-row matrix.
pub fn canonical_columns(s: usize, cols: &[u64]) -> Vec<u64> {
    let mut start: Vec<u64> = cols.to_vec();
    start.sort_unstable();
    let mut search = Search::new(s, &start, false);
    search.run();
    search.best_cols
}

/// True iff the already-sorted `sorted_cols` is its own canonical
/// arrangement. Stops at the first strictly smaller branch.
pub(crate) fn is_least(s: usize, sorted_cols: &[u64]) -> bool {
    let mut search = Search::new(s, sorted_cols, true);
    search.run();
    !search.beaten
}

struct Search {
    s: usize,
    m: usize,
    /// `row_bits[i]` has bit `j` set iff entry `(i, j)` is 1.
    row_bits: Vec<u64>,
    best_rows: Vec<u64>,
    best_cols: Vec<u64>,
    check_only: bool,
    beaten: bool,
}

impl Search {
    fn new(s: usize, sorted_cols: &[u64], check_only: bool) -> Self {
        let row_bits = (0..s)
            .map(|i| sorted_cols.iter().enumerate().fold(0u64, |acc, (j, &c)| acc | (((c >> (s - 1 - i)) & 1) << j)))
            .collect();
        Self {
            s,
            m: sorted_cols.len(),
            row_bits,
            best_rows: rows_of(s, sorted_cols),
            best_cols: sorted_cols.to_vec(),
            check_only,
            beaten: false,
        }
    }

    fn run(&mut self) {
        if self.s > 0 {
            self.descend(0, 0, &vec![0u64; self.m]);
        }
    }

    /// `prefixes[j]` holds the bits already placed in original column `j`.
    fn descend(&mut self, depth: usize, used: u64, prefixes: &[u64]) {
        let mut next = vec![0u64; self.m];
        for r in 0..self.s {
            if (used >> r) & 1 == 1 {
                continue;
            }
            let bits = self.row_bits[r];
            for (j, (n, &p)) in next.iter_mut().zip(prefixes).enumerate() {
                *n = (p << 1) | ((bits >> j) & 1);
            }
            let mut sorted = next.clone();
            sorted.sort_unstable();
            let placed = rows_of(depth + 1, &sorted);
            let ord = placed.as_slice().cmp(&self.best_rows[..=depth]);
            match ord {
                Ordering::Greater => continue,
                Ordering::Less if self.check_only => {
                    self.beaten = true;
                    return;
                }
                _ => {}
            }
            if depth + 1 == self.s {
                if ord == Ordering::Less {
                    self.best_rows = placed;
                    self.best_cols = sorted;
                }
            } else {
                self.descend(depth + 1, used | (1 << r), &next);
                if self.beaten {
                    return;
                }
            }
        }
    }
}
