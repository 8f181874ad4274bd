//! Spanning-tree counts and the Ferrers invariant in exact arithmetic.
//!
//! Tree counts come from the Matrix-Tree theorem: any cofactor of the
//! Laplacian, evaluated by fraction-free (Bareiss) elimination over big
//! integers. Every verdict is decided by exact rational comparison.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bigraph::{BipartiteGraph, GraphError};

pub type ExactInt = BigInt;
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("the Ferrers invariant needs both sides nonempty (p = {p}, q = {q})")]
    EmptySide { p: usize, q: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Good,
    Bad,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Good => "Good",
            Verdict::Bad => "Bad",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub tree_count: ExactInt,
    pub ferrers_invariant: ExactRational,
}

impl Classification {
    /// `F - T`; nonnegative exactly when the graph is Ferrers-good.
    pub fn gap(&self) -> ExactRational {
        &self.ferrers_invariant - BigRational::from_integer(self.tree_count.clone())
    }

    /// `F / T`, or `None` when there are no spanning trees.
    pub fn ratio(&self) -> Option<ExactRational> {
        (!self.tree_count.is_zero())
            .then(|| &self.ferrers_invariant / BigRational::from_integer(self.tree_count.clone()))
    }

    pub fn is_tight(&self) -> bool {
        self.ferrers_invariant == BigRational::from_integer(self.tree_count.clone())
    }
}

/// `D - A` over all `p + q` vertices, X first.
pub fn laplacian(g: &BipartiteGraph) -> Vec<Vec<i64>> {
    let n = g.order();
    let p = g.p();
    let mut l = alloc::vec![alloc::vec![0i64; n]; n];
    for (x, y) in g.edges() {
        let y = p + y;
        l[x][y] = -1;
        l[y][x] = -1;
        l[x][x] += 1;
        l[y][y] += 1;
    }
    l
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by Sylvester's identity
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// The Laplacian with row and column `deleted` removed, as a determinant.
pub fn laplacian_cofactor(g: &BipartiteGraph, deleted: usize) -> BigInt {
    let l = laplacian(g);
    let minor: Vec<Vec<BigInt>> = l
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != deleted)
        .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != deleted).map(|(_, &v)| BigInt::from(v)).collect())
        .collect();
    determinant(minor)
}

/// Number of spanning trees: 0 when disconnected, 1 for a single vertex.
/// The vertexless graph has no spanning tree and returns 0.
pub fn spanning_tree_count(g: &BipartiteGraph) -> ExactInt {
    match g.order() {
        0 => BigInt::zero(),
        1 => BigInt::one(),
        _ => laplacian_cofactor(g, 0),
    }
}

/// `(prod of all degrees) / (p q)`, reduced.
pub fn ferrers_invariant(g: &BipartiteGraph) -> Result<ExactRational, ExactError> {
    let (p, q) = (g.p(), g.q());
    if p == 0 || q == 0 {
        return Err(ExactError::EmptySide { p, q });
    }
    let product: BigInt = g.x_degrees().into_iter().chain(g.y_degrees()).map(BigInt::from).product();
    Ok(BigRational::new(product, BigInt::from(p * q)))
}

pub fn classify(g: &BipartiteGraph) -> Result<Classification, ExactError> {
    let ferrers_invariant = ferrers_invariant(g)?;
    let tree_count = spanning_tree_count(g);
    let verdict =
        if BigRational::from_integer(tree_count.clone()) <= ferrers_invariant { Verdict::Good } else { Verdict::Bad };
    Ok(Classification { verdict, tree_count, ferrers_invariant })
}

/// Square of the right-hand side of the weak bound
/// `T <= sqrt(e_1) * prod_{i>=2} (d_i + 1/2) * prod_{j>=2} (e_j + 1/2)`,
/// with both degree lists sorted descending (`d` on X, `e` on Y).
pub fn venkataramana_bound_squared(g: &BipartiteGraph) -> ExactRational {
    let (d, e) = g.degrees();
    let half_up = |x: &u32| BigRational::new(BigInt::from(2 * *x + 1), BigInt::from(2));
    let prod_d: BigRational = d.iter().skip(1).map(half_up).product();
    let prod_e: BigRational = e.iter().skip(1).map(half_up).product();
    let e1 = BigRational::from_integer(BigInt::from(e.first().copied().unwrap_or(0)));
    e1 * &prod_d * &prod_d * &prod_e * &prod_e
}

/// Decides the weak bound by comparing `T^2` against the squared bound.
pub fn venkataramana_holds(g: &BipartiteGraph) -> Result<bool, ExactError> {
    if !g.is_connected()? {
        return Err(GraphError::Disconnected.into());
    }
    if g.p() == 0 || g.q() == 0 {
        return Err(ExactError::EmptySide { p: g.p(), q: g.q() });
    }
    let t = spanning_tree_count(g);
    let lhs = BigRational::from_integer(&t * &t);
    Ok(lhs <= venkataramana_bound_squared(g))
}
