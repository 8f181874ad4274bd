//! Randomized checks that vertex gluing and edge joining keep graphs
//! Ferrers-good, and an exhaustive check of the cut-vertex density
//! criterion.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bigraph::{enumerate_connected, BipartiteGraph};
use crate::exact::{classify, Classification, ExactError, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralKind {
    Glue,
    Join,
    Koo,
}

impl StructuralKind {
    pub fn name(self) -> &'static str {
        match self {
            StructuralKind::Glue => "glue",
            StructuralKind::Join => "join",
            StructuralKind::Koo => "koo",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructuralFinding {
    pub kind: StructuralKind,
    pub graph: BipartiteGraph,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct KooReport {
    pub n_max: usize,
    pub graphs: u64,
    /// Graphs meeting the cut-vertex and density condition.
    pub satisfying: u64,
    pub counterexamples: Vec<StructuralFinding>,
}

/// Classifies every connected graph on `2..=n_max` vertices meeting the
/// condition; all of them should be good.
pub fn koo_sweep(n_max: usize) -> Result<KooReport, ExactError> {
    let mut report = KooReport { n_max, ..Default::default() };
    for n in 2..=n_max {
        for g in enumerate_connected(n, false)? {
            report.graphs += 1;
            if !g.koo_condition()? {
                continue;
            }
            report.satisfying += 1;
            let c = classify(&g)?;
            if c.verdict == Verdict::Bad {
                report.counterexamples.push(StructuralFinding {
                    kind: StructuralKind::Koo,
                    graph: g,
                    classification: c,
                });
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct StructuralReport {
    pub n_max: usize,
    pub seed: u64,
    /// Good graphs the trials draw from.
    pub pool: usize,
    pub glue_trials: u64,
    pub join_trials: u64,
    pub koo: KooReport,
    pub counterexamples: Vec<StructuralFinding>,
}

impl StructuralReport {
    pub fn finding_count(&self) -> usize {
        self.counterexamples.len() + self.koo.counterexamples.len()
    }
}

fn pick<'a>(rng: &mut ChaCha8Rng, pool: &'a [BipartiteGraph]) -> BipartiteGraph {
    let g: &'a BipartiteGraph = &pool[rng.gen_range(0..pool.len())];
    // either side may host the attachment vertex
    if rng.gen_bool(0.5) {
        g.transpose()
    } else {
        g.clone()
    }
}

/// `trials` glue and `trials` join experiments on random pairs of good
/// connected graphs with at most `n_max` vertices, plus [`koo_sweep`].
pub fn structural_property_sweep(n_max: usize, trials: u64, seed: u64) -> Result<StructuralReport, ExactError> {
    let mut pool = Vec::new();
    for n in 2..=n_max {
        for g in enumerate_connected(n, false)? {
            if classify(&g)?.verdict == Verdict::Good {
                pool.push(g);
            }
        }
    }
    let mut report = StructuralReport { n_max, seed, pool: pool.len(), koo: koo_sweep(n_max)?, ..Default::default() };
    if pool.is_empty() {
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let (g1, g2) = (pick(&mut rng, &pool), pick(&mut rng, &pool));
        let (x1, x2) = (rng.gen_range(0..g1.p()), rng.gen_range(0..g2.p()));
        let glued = g1.glue_at_vertex(x1, &g2, x2)?;
        report.glue_trials += 1;
        let c = classify(&glued)?;
        if c.verdict == Verdict::Bad {
            report.counterexamples.push(StructuralFinding {
                kind: StructuralKind::Glue,
                graph: glued,
                classification: c,
            });
        }

        let (g1, g2) = (pick(&mut rng, &pool), pick(&mut rng, &pool));
        let (u, v) = (rng.gen_range(0..g1.p()), rng.gen_range(0..g2.q()));
        let joined = g1.join_by_edge(u, &g2, v)?;
        report.join_trials += 1;
        let c = classify(&joined)?;
        if c.verdict == Verdict::Bad {
            report.counterexamples.push(StructuralFinding {
                kind: StructuralKind::Join,
                graph: joined,
                classification: c,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn structural_examples() {
        let c4 = BipartiteGraph::cycle(4).unwrap();
        let glued = classify(&c4.glue_at_vertex(0, &c4, 0).unwrap()).unwrap();
        assert_eq!(glued.verdict, Verdict::Good);
        assert_eq!(glued.tree_count, BigInt::from(16));

        let k2 = BipartiteGraph::complete(1, 1).unwrap();
        let p4 = k2.join_by_edge(0, &k2, 0).unwrap();
        assert_eq!(p4.order(), 4);
        let c = classify(&p4).unwrap();
        assert_eq!((c.verdict, c.tree_count), (Verdict::Good, BigInt::from(1)));

        let p3 = BipartiteGraph::path(3).unwrap();
        assert!(p3.koo_condition().unwrap());
        assert_eq!(classify(&p3).unwrap().verdict, Verdict::Good);
    }

    #[test]
    fn sweep_is_clean_and_seeded() {
        let a = structural_property_sweep(5, 50, 3).unwrap();
        assert_eq!(a.finding_count(), 0);
        assert_eq!((a.glue_trials, a.join_trials), (50, 50));
        assert!(a.koo.satisfying > 0);
        assert_eq!(a, structural_property_sweep(5, 50, 3).unwrap());
    }
}
