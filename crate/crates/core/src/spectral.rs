//! Floating-point Laplacian spectra.
//!
//! This path only cross-checks the exact one. Eigenvalues come from cyclic
//! Jacobi rotations on the full `n x n` Laplacian, so the trivial zero
//! eigenvalue is kept and doubles as a solver sanity check.

use alloc::vec::Vec;

use libm::{fabs, sqrt};
use thiserror::Error;

use crate::bigraph::{BipartiteGraph, GraphError};
use crate::exact::laplacian;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("the Ferrers invariant needs both sides nonempty (p = {p}, q = {q})")]
    EmptySide { p: usize, q: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Absolute accuracy target for a Laplacian with `edges` edges.
pub fn spectrum_tolerance(edges: usize) -> f64 {
    1e-9 * f64::max(1.0, 2.0 * edges as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumVector {
    /// Descending; length `p + q`.
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
}

impl SpectrumVector {
    /// Smallest eigenvalue is ~0 and the trace is ~`2|E|`.
    pub fn is_consistent(&self, g: &BipartiteGraph) -> bool {
        let trace: f64 = self.eigenvalues.iter().sum();
        let smallest = self.eigenvalues.last().copied().unwrap_or(0.0);
        self.eigenvalues.len() == g.order()
            && fabs(smallest) <= self.tolerance
            && fabs(trace - 2.0 * g.edge_count() as f64) <= self.tolerance
    }
}

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix, descending.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    let scale = a.iter().flatten().map(|x| x * x).sum::<f64>();
    let stop = 1e-30 * f64::max(scale, 1.0);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = if fabs(theta) > 1e150 {
                    0.5 / theta
                } else {
                    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
                    s / (fabs(theta) + sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                rotate(&mut a, p, q, c, s);
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    eig
}

/// `a <- J^T a J` for the plane rotation in `(p, q)`.
fn rotate(a: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    for row in a.iter_mut() {
        let (kp, kq) = (row[p], row[q]);
        row[p] = c * kp - s * kq;
        row[q] = s * kp + c * kq;
    }
    let (head, tail) = a.split_at_mut(q);
    for (pk, qk) in head[p].iter_mut().zip(tail[0].iter_mut()) {
        let (x, y) = (*pk, *qk);
        *pk = c * x - s * y;
        *qk = s * x + c * y;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
}

pub fn laplacian_spectrum(g: &BipartiteGraph) -> SpectrumVector {
    let l: Vec<Vec<f64>> = laplacian(g).into_iter().map(|row| row.into_iter().map(|v| v as f64).collect()).collect();
    let mut eigenvalues = symmetric_eigenvalues(l);
    // clamp solver noise on the PSD spectrum
    for v in &mut eigenvalues {
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    SpectrumVector { eigenvalues, tolerance: spectrum_tolerance(g.edge_count()) }
}

/// `(1/n) * prod of the n-1 largest eigenvalues`.
pub fn spectral_tree_count(g: &BipartiteGraph) -> Result<f64, SpectralError> {
    if !g.is_connected()? {
        return Err(GraphError::Disconnected.into());
    }
    let spec = laplacian_spectrum(g);
    let n = spec.eigenvalues.len();
    let product: f64 = spec.eigenvalues[..n - 1].iter().product();
    Ok(product / n as f64)
}

/// Spectrum (zero-padded) majorized by the conjugate of the full degree
/// sequence, each prefix comparison slackened by `eps`.
pub fn grone_merris_check(g: &BipartiteGraph, eps: f64) -> bool {
    let spec = laplacian_spectrum(g);
    let conj = g.degree_partition().conjugate();
    let len = spec.eigenvalues.len().max(conj.len());
    let (mut sl, mut sd) = (0.0f64, 0.0f64);
    for i in 0..len {
        sl += spec.eigenvalues.get(i).copied().unwrap_or(0.0);
        sd += conj.parts().get(i).map(|&x| f64::from(x)).unwrap_or(0.0);
        if sl > sd + eps {
            return false;
        }
    }
    fabs(sl - sd) <= eps
}

/// `(prod of degrees) / (p q)` in floating point.
pub fn ferrers_invariant_f64(g: &BipartiteGraph) -> Result<f64, SpectralError> {
    let (p, q) = (g.p(), g.q());
    if p == 0 || q == 0 {
        return Err(SpectralError::EmptySide { p, q });
    }
    let product: f64 = g.x_degrees().into_iter().chain(g.y_degrees()).map(f64::from).product();
    Ok(product / (p * q) as f64)
}

/// Float mirror of the exact verdict: spectral tree count against the
/// Ferrers invariant, with additive slack `eps`.
pub fn inequality1_check(g: &BipartiteGraph, eps: f64) -> Result<bool, SpectralError> {
    let t = spectral_tree_count(g)?;
    Ok(t <= ferrers_invariant_f64(g)? + eps)
}
