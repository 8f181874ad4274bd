//! The majorization conjecture on degree sequences and Laplacian-like
//! spectra, and an exhaustive integer scanner for counterexamples.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::{enumerate_partitions, is_bigraphic, majorized_by, Partition, SequenceError, WeakSeq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("lambda: {0}")]
    Lambda(#[from] SequenceError),
    #[error("lambda entries must be positive")]
    NonPositive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture2Instance {
    pub a: Partition,
    pub b: Partition,
    pub lam: WeakSeq<BigRational>,
}

impl Conjecture2Instance {
    /// Validates that `lam` is weakly decreasing and positive. Its length is
    /// left to [`check_conjecture2_instance`].
    pub fn new(a: Partition, b: Partition, lam: Vec<BigRational>) -> Result<Self, InstanceError> {
        if lam.iter().any(|x| *x <= BigRational::zero()) {
            return Err(InstanceError::NonPositive);
        }
        Ok(Self { a, b, lam: WeakSeq::new(lam)? })
    }

    pub fn from_integers(a: Partition, b: Partition, lam: &Partition) -> Self {
        let lam = lam.parts().iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        Self { a, b, lam: WeakSeq::new(lam).expect("partitions are decreasing and nonnegative") }
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> usize {
        self.b.len()
    }

    pub fn n(&self) -> usize {
        self.p() + self.q()
    }

    /// The merged degree sequence `d`, descending.
    pub fn degrees(&self) -> Partition {
        self.a.union(&self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    Shape,
    GaleRyser,
    DBelowLambda,
    LambdaBelowDStar,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Shape => "shape",
            Hypothesis::GaleRyser => "gale_ryser",
            Hypothesis::DBelowLambda => "d_below_lambda",
            Hypothesis::LambdaBelowDStar => "lambda_below_dstar",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conjecture2Verdict {
    HypothesisFailed(Hypothesis),
    Holds { lhs: BigRational, rhs: BigRational },
    Violated { lhs: BigRational, rhs: BigRational },
}

impl Conjecture2Verdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, Conjecture2Verdict::Violated { .. })
    }
}

fn to_rational(p: &Partition) -> WeakSeq<BigRational> {
    let v = p.parts().iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
    WeakSeq::new(v).expect("partitions are decreasing and nonnegative")
}

/// Checks the hypotheses in order (shape, Gale-Ryser, `d ⪯ λ`, `λ ⪯ d*`),
/// then compares `(1/n) ∏ λ` with `(1/pq) ∏ d` exactly.
pub fn check_conjecture2_instance(inst: &Conjecture2Instance) -> Conjecture2Verdict {
    let (p, q, n) = (inst.p(), inst.q(), inst.n());
    let zero = BigRational::zero();
    if p == 0 || q == 0 || inst.lam.len() + 1 != n || inst.lam.values().iter().any(|x| *x <= zero) {
        return Conjecture2Verdict::HypothesisFailed(Hypothesis::Shape);
    }
    if !is_bigraphic(&inst.a, &inst.b) {
        return Conjecture2Verdict::HypothesisFailed(Hypothesis::GaleRyser);
    }
    let d = inst.degrees();
    if !majorized_by(&to_rational(&d), &inst.lam) {
        return Conjecture2Verdict::HypothesisFailed(Hypothesis::DBelowLambda);
    }
    if !majorized_by(&inst.lam, &to_rational(&d.conjugate())) {
        return Conjecture2Verdict::HypothesisFailed(Hypothesis::LambdaBelowDStar);
    }
    let lam_product = inst.lam.values().iter().fold(BigRational::one(), |acc, x| acc * x);
    let lhs = lam_product / BigInt::from(n);
    let d_product = d.parts().iter().fold(BigInt::one(), |acc, &x| acc * x);
    let rhs = BigRational::new(d_product, BigInt::from(p * q));
    if lhs <= rhs {
        Conjecture2Verdict::Holds { lhs, rhs }
    } else {
        Conjecture2Verdict::Violated { lhs, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanReport {
    pub sum_max: u32,
    pub n_max: usize,
    /// Gale-Ryser-feasible `(a, b)` pairs visited.
    pub pairs: u64,
    /// `(a, b, λ)` triples checked.
    pub instances: u64,
    /// Triples that passed every hypothesis.
    pub hypotheses_met: u64,
    pub violations: Vec<(Conjecture2Instance, Conjecture2Verdict)>,
}

/// Every violated instance with `p + q <= n_max`, `|a| = |b| <= sum_max`
/// and integer `λ`. Pairs run with `p <= q` and, when `p == q`, `a >= b`,
/// since swapping `a` and `b` changes neither hypotheses nor conclusion.
pub fn scan_conjecture2(sum_max: u32, n_max: usize) -> Vec<(Conjecture2Instance, Conjecture2Verdict)> {
    scan_conjecture2_with(sum_max, n_max, |_, _| {}).violations
}

/// [`scan_conjecture2`] with a callback on every checked instance. Order:
/// `n`, `p`, `m`, then `a`, `b`, `λ` in reverse lexicographic order.
pub fn scan_conjecture2_with<F>(sum_max: u32, n_max: usize, mut visit: F) -> ScanReport
where
    F: FnMut(&Conjecture2Instance, &Conjecture2Verdict),
{
    let mut report = ScanReport { sum_max, n_max, ..Default::default() };
    for n in 2..=n_max {
        for p in 1..=n / 2 {
            let q = n - p;
            for m in 1..=sum_max {
                for a in enumerate_partitions(m, p, q as u32) {
                    for b in enumerate_partitions(m, q, p as u32) {
                        if (p == q && a < b) || !is_bigraphic(&a, &b) {
                            continue;
                        }
                        report.pairs += 1;
                        for lam in enumerate_partitions(2 * m, n - 1, 2 * m) {
                            let inst = Conjecture2Instance::from_integers(a.clone(), b.clone(), &lam);
                            let verdict = check_conjecture2_instance(&inst);
                            report.instances += 1;
                            if !matches!(verdict, Conjecture2Verdict::HypothesisFailed(_)) {
                                report.hypotheses_met += 1;
                            }
                            visit(&inst, &verdict);
                            if verdict.is_violated() {
                                report.violations.push((inst, verdict));
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn inst(a: &str, b: &str, lam: &str) -> Conjecture2Instance {
        Conjecture2Instance::from_integers(part(a), part(b), &part(lam))
    }

    #[test]
    fn instance_examples() {
        assert_eq!(
            check_conjecture2_instance(&inst("2,2", "2,1,1", "2,2,2,2")),
            Conjecture2Verdict::Violated { lhs: rat(16, 5), rhs: rat(4, 3) }
        );
        assert_eq!(
            check_conjecture2_instance(&inst("2,2", "2,1,1", "5,1,1,1")),
            Conjecture2Verdict::Holds { lhs: rat(1, 1), rhs: rat(4, 3) }
        );
        assert_eq!(
            check_conjecture2_instance(&inst("2,2", "2,1,1", "2,2,2,1")),
            Conjecture2Verdict::HypothesisFailed(Hypothesis::DBelowLambda)
        );
        assert_eq!(
            check_conjecture2_instance(&inst("1", "1", "2")),
            Conjecture2Verdict::Holds { lhs: rat(1, 1), rhs: rat(1, 1) }
        );
    }

    #[test]
    fn hypothesis_order() {
        // wrong length reported before anything else
        assert_eq!(
            check_conjecture2_instance(&inst("3", "1", "2,1")),
            Conjecture2Verdict::HypothesisFailed(Hypothesis::Shape)
        );
        assert_eq!(
            check_conjecture2_instance(&inst("3", "1,1", "3,2")),
            Conjecture2Verdict::HypothesisFailed(Hypothesis::GaleRyser)
        );
        // d = (2,2,2,2) has d* = (4,4)
        assert_eq!(
            check_conjecture2_instance(&inst("2,2", "2,2", "6,1,1")),
            Conjecture2Verdict::HypothesisFailed(Hypothesis::LambdaBelowDStar)
        );
        let empty = Conjecture2Instance::from_integers(part(""), part("1"), &part(""));
        assert_eq!(check_conjecture2_instance(&empty), Conjecture2Verdict::HypothesisFailed(Hypothesis::Shape));
    }

    #[test]
    fn rational_lambda() {
        let i = Conjecture2Instance::new(part("1"), part("1"), vec![rat(2, 1)]).unwrap();
        assert!(matches!(check_conjecture2_instance(&i), Conjecture2Verdict::Holds { .. }));
        let half =
            Conjecture2Instance::new(part("2,2"), part("2,1,1"), vec![rat(5, 2), rat(5, 2), rat(3, 2), rat(3, 2)])
                .unwrap();
        assert!(!matches!(check_conjecture2_instance(&half), Conjecture2Verdict::HypothesisFailed(_)));
        assert_eq!(Conjecture2Instance::new(part("1"), part("1"), vec![rat(0, 1)]), Err(InstanceError::NonPositive));
        assert!(Conjecture2Instance::new(part("1"), part("1"), vec![rat(1, 1), rat(2, 1)]).is_err());
    }

    #[test]
    fn scan_examples() {
        let found = scan_conjecture2(4, 5);
        let known = found.iter().find(|(i, _)| *i == inst("2,2", "2,1,1", "2,2,2,2")).unwrap();
        assert_eq!(known.1, Conjecture2Verdict::Violated { lhs: rat(16, 5), rhs: rat(4, 3) });
        // the path on three vertices already fails with lam = (2,2)
        assert_eq!(found.len(), 16);
        assert_eq!(found[0].0, inst("2", "1,1", "2,2"));
        assert_eq!(found[0].1, Conjecture2Verdict::Violated { lhs: rat(4, 3), rhs: rat(1, 1) });
        assert!(found.iter().all(|(i, v)| check_conjecture2_instance(i) == *v));
        assert!(scan_conjecture2(10, 2).is_empty());
        assert!(scan_conjecture2(1, 8).is_empty());
        let tiny = scan_conjecture2_with(1, 2, |_, _| {});
        assert_eq!((tiny.pairs, tiny.instances, tiny.hypotheses_met), (1, 1, 1));
    }
}
