//! JSON line shapes. Exact integers are decimal strings and rationals are
//! `num/den` strings so no reader has to trust floating point.

use ferrers_core::campaign::{
    Conjecture2Instance, Conjecture2Verdict, LevelSummary, VerificationRecord, METHODOLOGY, PRUNING_ARGUMENT,
};
use ferrers_core::exact::{Classification, ExactRational};
use ferrers_core::BipartiteGraph;
use serde::{Deserialize, Serialize};

use crate::format::{parse_rational, rational_to_string, to_graph6, FormatError, GraphJson};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChecksLine {
    pub grone_merris: bool,
    pub venkataramana: bool,
    pub inequality1: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ferrers_equality: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordLine {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub key: String,
    pub graph6: String,
    pub biconnected: bool,
    pub tree_count: String,
    pub ferrers_invariant: String,
    pub verdict: String,
    pub checks: ChecksLine,
}

impl From<&VerificationRecord> for RecordLine {
    fn from(r: &VerificationRecord) -> Self {
        let c = &r.checks;
        Self {
            kind: "record".into(),
            n: r.n(),
            p: r.graph.p(),
            q: r.graph.q(),
            key: hex::encode(r.key.as_bytes()),
            graph6: to_graph6(&r.graph),
            biconnected: r.biconnected,
            tree_count: r.classification.tree_count.to_string(),
            ferrers_invariant: rational_to_string(&r.classification.ferrers_invariant),
            verdict: r.verdict().to_string(),
            checks: ChecksLine {
                grone_merris: c.grone_merris,
                venkataramana: c.venkataramana,
                inequality1: c.inequality1,
                ferrers_equality: c.ferrers_equality,
            },
        }
    }
}

fn opt_rational(r: &Option<ExactRational>) -> Option<String> {
    r.as_ref().map(rational_to_string)
}

fn parse_opt(s: &Option<String>) -> Result<Option<ExactRational>, FormatError> {
    s.as_deref().map(parse_rational).transpose()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelLine {
    pub n: usize,
    pub classes: u64,
    pub bad: u64,
    pub tight: u64,
    pub min_gap: Option<String>,
    pub min_ratio_biconnected: Option<String>,
    pub grone_merris_failures: u64,
    pub venkataramana_failures: u64,
    pub inequality1_failures: u64,
    pub ferrers_equality_failures: u64,
}

impl From<&LevelSummary> for LevelLine {
    fn from(l: &LevelSummary) -> Self {
        Self {
            n: l.n,
            classes: l.classes,
            bad: l.bad,
            tight: l.tight,
            min_gap: opt_rational(&l.min_gap),
            min_ratio_biconnected: opt_rational(&l.min_ratio_biconnected),
            grone_merris_failures: l.grone_merris_failures,
            venkataramana_failures: l.venkataramana_failures,
            inequality1_failures: l.inequality1_failures,
            ferrers_equality_failures: l.ferrers_equality_failures,
        }
    }
}

impl TryFrom<&LevelLine> for LevelSummary {
    type Error = FormatError;

    fn try_from(l: &LevelLine) -> Result<Self, FormatError> {
        Ok(Self {
            n: l.n,
            classes: l.classes,
            bad: l.bad,
            tight: l.tight,
            min_gap: parse_opt(&l.min_gap)?,
            min_ratio_biconnected: parse_opt(&l.min_ratio_biconnected)?,
            grone_merris_failures: l.grone_merris_failures,
            venkataramana_failures: l.venkataramana_failures,
            inequality1_failures: l.inequality1_failures,
            ferrers_equality_failures: l.ferrers_equality_failures,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    #[serde(rename = "type")]
    pub kind: String,
    pub command: String,
    pub max_vertices: usize,
    pub pruned: bool,
    pub eps: f64,
    pub classes: u64,
    pub bad_count: u64,
    pub side_check_failures: u64,
    pub levels: Vec<LevelLine>,
    pub methodology: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pruning_argument: Option<String>,
}

impl VerifySummary {
    pub fn new(max_vertices: usize, pruned: bool, eps: f64, levels: &[LevelSummary]) -> Self {
        Self {
            kind: "summary".into(),
            command: "verify".into(),
            max_vertices,
            pruned,
            eps,
            classes: levels.iter().map(|l| l.classes).sum(),
            bad_count: levels.iter().map(|l| l.bad).sum(),
            side_check_failures: levels.iter().map(LevelSummary::side_check_failures).sum(),
            levels: levels.iter().map(LevelLine::from).collect(),
            methodology: METHODOLOGY.into(),
            pruning_argument: pruned.then(|| PRUNING_ARGUMENT.into()),
        }
    }
}

/// Output of `classify`: exactly `T`, `F` and the verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyLine {
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "F")]
    pub f: String,
    pub verdict: String,
}

impl From<&Classification> for ClassifyLine {
    fn from(c: &Classification) -> Self {
        Self {
            t: c.tree_count.to_string(),
            f: rational_to_string(&c.ferrers_invariant),
            verdict: c.verdict.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Conjecture2Line {
    #[serde(rename = "type")]
    pub kind: String,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub lambda: Vec<String>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hypothesis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
}

impl Conjecture2Line {
    pub fn new(inst: &Conjecture2Instance, verdict: &Conjecture2Verdict) -> Self {
        let (name, hypothesis, lhs, rhs) = match verdict {
            Conjecture2Verdict::HypothesisFailed(h) => ("HypothesisFailed", Some(h.name().to_string()), None, None),
            Conjecture2Verdict::Holds { lhs, rhs } => ("Holds", None, Some(lhs), Some(rhs)),
            Conjecture2Verdict::Violated { lhs, rhs } => ("Violated", None, Some(lhs), Some(rhs)),
        };
        Self {
            kind: "record".into(),
            a: inst.a.parts().to_vec(),
            b: inst.b.parts().to_vec(),
            lambda: inst.lam.values().iter().map(rational_to_string).collect(),
            verdict: name.into(),
            hypothesis,
            lhs: lhs.map(rational_to_string),
            rhs: rhs.map(rational_to_string),
        }
    }
}

/// A graph with its classification, for single-graph commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphLine {
    #[serde(rename = "type")]
    pub kind: String,
    pub graph: GraphJson,
    pub graph6: String,
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "F")]
    pub f: String,
    pub verdict: String,
}

impl GraphLine {
    pub fn new(kind: &str, g: &BipartiteGraph, c: &Classification) -> Self {
        let cl = ClassifyLine::from(c);
        Self { kind: kind.into(), graph: g.into(), graph6: to_graph6(g), t: cl.t, f: cl.f, verdict: cl.verdict }
    }
}
