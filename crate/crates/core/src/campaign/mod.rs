//! Verification drivers.
//!
//! Everything here is deterministic and single-threaded; the `ferrers-lab`
//! crate shards the same work across threads and persists it. A campaign
//! stream is ordered by level, then by enumeration shard, then by canonical
//! key within the shard, and [`verify_shard`] is the unit both sides share.

mod conjecture2;
mod structural;

pub use conjecture2::{
    check_conjecture2_instance, scan_conjecture2, scan_conjecture2_with, Conjecture2Instance, Conjecture2Verdict,
    Hypothesis, InstanceError, ScanReport,
};
pub use structural::{
    koo_sweep, structural_property_sweep, KooReport, StructuralFinding, StructuralKind, StructuralReport,
};

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bigraph::{enumerate_shard, shards, BipartiteGraph, CanonicalKey, GraphError, ShardId};
use crate::exact::{classify, venkataramana_holds, Classification, ExactError, Verdict};
use crate::partition::{all_partitions, Partition};
use crate::spectral::{grone_merris_check, inequality1_check};

/// Default relative slack for the floating-point side checks; the absolute
/// slack for a graph is this times `max(1, 2|E|)`.
pub const DEFAULT_EPS: f64 = 1e-7;

/// Why restricting every level to 2-connected graphs loses nothing.
pub const PRUNING_ARGUMENT: &str = "Gluing two Ferrers-good graphs at a vertex gives a Ferrers-good graph, \
so a smallest Ferrers-bad graph has no cut vertex. Levels run in increasing order; once every 2-connected \
graph up to n vertices is good, every connected graph up to n vertices is good.";

/// Which graphs the exhaustive campaign covers.
pub const METHODOLOGY: &str = "One canonical representative per isomorphism class of connected bipartite \
graphs (unique bipartition up to side swap). Disconnected graphs have no spanning tree and are good \
without checking.";

pub fn absolute_eps(rel: f64, g: &BipartiteGraph) -> f64 {
    rel * f64::max(1.0, 2.0 * g.edge_count() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideChecks {
    pub grone_merris: bool,
    pub venkataramana: bool,
    pub inequality1: bool,
    /// Only present for Ferrers graphs, where `T = F` must hold exactly.
    pub ferrers_equality: Option<bool>,
}

impl SideChecks {
    pub fn all_pass(&self) -> bool {
        self.grone_merris && self.venkataramana && self.inequality1 && self.ferrers_equality != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub key: CanonicalKey,
    pub graph: BipartiteGraph,
    pub biconnected: bool,
    pub classification: Classification,
    pub checks: SideChecks,
}

impl VerificationRecord {
    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn verdict(&self) -> Verdict {
        self.classification.verdict
    }
}

/// Classifies one connected graph and runs every side check on it.
pub fn verify_graph(g: &BipartiteGraph, eps_rel: f64) -> Result<VerificationRecord, ExactError> {
    let key = g.canonical_key()?;
    let classification = classify(g)?;
    let eps = absolute_eps(eps_rel, g);
    let checks = SideChecks {
        grone_merris: grone_merris_check(g, eps),
        venkataramana: venkataramana_holds(g)?,
        inequality1: inequality1_check(g, eps).unwrap_or(false),
        ferrers_equality: g.is_ferrers().then(|| classification.is_tight()),
    };
    Ok(VerificationRecord { key, graph: g.clone(), biconnected: g.is_biconnected(), classification, checks })
}

/// Records for one shard, sorted by canonical key.
pub fn verify_shard(
    n: usize,
    shard: ShardId,
    prune: bool,
    eps_rel: f64,
) -> Result<Vec<VerificationRecord>, ExactError> {
    let mut out =
        enumerate_shard(n, shard, prune)?.map(|g| verify_graph(&g, eps_rel)).collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LevelSummary {
    pub n: usize,
    pub classes: u64,
    pub bad: u64,
    /// Graphs with `T = F` exactly.
    pub tight: u64,
    /// Least `F - T` over the level.
    pub min_gap: Option<BigRational>,
    /// Least `F / T` over the 2-connected graphs of the level.
    pub min_ratio_biconnected: Option<BigRational>,
    pub grone_merris_failures: u64,
    pub venkataramana_failures: u64,
    pub inequality1_failures: u64,
    pub ferrers_equality_failures: u64,
}

fn keep_min(slot: &mut Option<BigRational>, value: BigRational) {
    if slot.as_ref().is_none_or(|cur| value < *cur) {
        *slot = Some(value);
    }
}

impl LevelSummary {
    pub fn new(n: usize) -> Self {
        Self { n, ..Self::default() }
    }

    pub fn absorb(&mut self, r: &VerificationRecord) {
        self.classes += 1;
        if r.verdict() == Verdict::Bad {
            self.bad += 1;
        }
        if r.classification.is_tight() {
            self.tight += 1;
        }
        keep_min(&mut self.min_gap, r.classification.gap());
        if r.biconnected {
            if let Some(ratio) = r.classification.ratio() {
                keep_min(&mut self.min_ratio_biconnected, ratio);
            }
        }
        self.grone_merris_failures += u64::from(!r.checks.grone_merris);
        self.venkataramana_failures += u64::from(!r.checks.venkataramana);
        self.inequality1_failures += u64::from(!r.checks.inequality1);
        self.ferrers_equality_failures += u64::from(r.checks.ferrers_equality == Some(false));
    }

    /// Order-insensitive combination of two partial summaries of one level.
    pub fn merge(&mut self, other: &LevelSummary) {
        debug_assert_eq!(self.n, other.n);
        self.classes += other.classes;
        self.bad += other.bad;
        self.tight += other.tight;
        if let Some(v) = &other.min_gap {
            keep_min(&mut self.min_gap, v.clone());
        }
        if let Some(v) = &other.min_ratio_biconnected {
            keep_min(&mut self.min_ratio_biconnected, v.clone());
        }
        self.grone_merris_failures += other.grone_merris_failures;
        self.venkataramana_failures += other.venkataramana_failures;
        self.inequality1_failures += other.inequality1_failures;
        self.ferrers_equality_failures += other.ferrers_equality_failures;
    }

    pub fn side_check_failures(&self) -> u64 {
        self.grone_merris_failures
            + self.venkataramana_failures
            + self.inequality1_failures
            + self.ferrers_equality_failures
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignReport {
    pub n_max: usize,
    pub pruned: bool,
    pub levels: Vec<LevelSummary>,
    pub bad: Vec<VerificationRecord>,
}

impl CampaignReport {
    pub fn bad_count(&self) -> u64 {
        self.levels.iter().map(|l| l.bad).sum()
    }

    pub fn classes(&self) -> u64 {
        self.levels.iter().map(|l| l.classes).sum()
    }

    pub fn side_check_failures(&self) -> u64 {
        self.levels.iter().map(LevelSummary::side_check_failures).sum()
    }

    /// Pruned levels only prove something while nothing below them failed.
    pub fn pruning_sound(&self) -> bool {
        !self.pruned || self.bad_count() == 0
    }
}

/// Exhaustive check of `T <= F` over connected bipartite graphs on
/// `2..=n_max` vertices, levels in increasing order. With `prune`, each
/// level only visits 2-connected graphs (see [`PRUNING_ARGUMENT`]).
pub fn verify_conjecture1<F>(
    n_max: usize,
    prune: bool,
    eps_rel: f64,
    mut on_record: F,
) -> Result<CampaignReport, ExactError>
where
    F: FnMut(&VerificationRecord),
{
    if n_max < 2 {
        return Err(GraphError::TooFewVertices(n_max).into());
    }
    let mut report = CampaignReport { n_max, pruned: prune, levels: Vec::new(), bad: Vec::new() };
    for n in 2..=n_max {
        let mut level = LevelSummary::new(n);
        for shard in shards(n)? {
            for r in verify_shard(n, shard, prune, eps_rel)? {
                level.absorb(&r);
                if r.verdict() == Verdict::Bad {
                    report.bad.push(r.clone());
                }
                on_record(&r);
            }
        }
        report.levels.push(level);
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct FerrersEqualityReport {
    pub max_cells: u32,
    pub checked: u64,
    pub failures: Vec<(Partition, BigInt, BigRational)>,
}

/// Checks `T = F` exactly on the Ferrers graph of every partition with
/// `1..=max_cells` cells.
pub fn verify_ferrers_equality(max_cells: u32) -> Result<FerrersEqualityReport, ExactError> {
    let mut report = FerrersEqualityReport { max_cells, ..Default::default() };
    for m in 1..=max_cells {
        for lam in all_partitions(m) {
            let c = classify(&BipartiteGraph::ferrers_from_partition(&lam)?)?;
            report.checked += 1;
            if !c.is_tight() {
                report.failures.push((lam, c.tree_count, c.ferrers_invariant));
            }
        }
    }
    Ok(report)
}
