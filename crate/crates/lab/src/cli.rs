//! Command-line front end.
//!
//! Exit codes: 0 success with no findings, 3 success with findings (a
//! Ferrers-bad graph, a violated instance, a failed side check), 1 usage
//! error, 2 malformed input, unreadable checkpoint or IO failure.

use std::ffi::OsString;
use std::fs::{File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use ferrers_core::bigraph::enumerate_connected;
use ferrers_core::campaign::{
    check_conjecture2_instance, koo_sweep, scan_conjecture2_with, structural_property_sweep, verify_ferrers_equality,
    Conjecture2Instance, DEFAULT_EPS,
};
use ferrers_core::exact::{classify, spanning_tree_count, Verdict};
use ferrers_core::spectral::{laplacian_spectrum, spectral_tree_count};
use ferrers_core::BipartiteGraph;
use serde_json::json;

use crate::checkpoint;
use crate::error::LabError;
use crate::format::{
    from_graph6, parse_graph_json, parse_partition, parse_rational_list, rational_to_string, to_graph6,
};
use crate::output::{ClassifyLine, Conjecture2Line, GraphLine};
use crate::runner::{run_verify, CountingWriter, VerifyOptions, VerifyOutcome};

pub const THREADS_ENV: &str = "FERRERS_LAB_THREADS";

#[derive(Debug, Parser)]
#[command(name = "ferrers-lab", version, about = "Exact checks of spanning-tree bounds on bipartite graphs")]
struct Cli {
    /// Write JSON lines here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify every connected bipartite graph up to a size.
    Verify(VerifyArgs),
    /// Check T = F on Ferrers graphs of all small partitions.
    FerrersEq {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=40))]
        max_cells: u32,
    },
    /// Scan degree/spectrum majorization instances, or check one.
    Scan2(Scan2Args),
    /// Print T, F and the verdict for one graph.
    Classify(GraphArgs),
    /// Print the spanning-tree count of one graph.
    Treecount(GraphArgs),
    /// Print the Laplacian spectrum of one graph.
    Spectrum(GraphArgs),
    /// List canonical connected bipartite graphs.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=16))]
        max_vertices: u64,
        /// Only 2-connected graphs.
        #[arg(long)]
        prune: bool,
    },
    /// Glue or join two graphs, or run random glue/join trials.
    Glue(GlueArgs),
    /// Check the cut-vertex density criterion over all small graphs, or one.
    Koo {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..=12))]
        max_vertices: u64,
        #[command(flatten)]
        graph: OptionalGraphArgs,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=16))]
    max_vertices: u64,
    /// Visit only 2-connected graphs at each level.
    #[arg(long)]
    prune: bool,
    /// Relative slack for floating-point side checks (scaled by 2|E|).
    #[arg(long, default_value_t = DEFAULT_EPS, value_parser = positive_f64)]
    eps: f64,
    #[arg(long, value_name = "PATH")]
    checkpoint: Option<PathBuf>,
    /// Continue from --checkpoint, cutting --out back to the saved offset.
    #[arg(long, requires = "checkpoint")]
    resume: bool,
    /// Shards per checkpointed batch.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    shards: u64,
    #[arg(long, hide = true)]
    halt_after: Option<u64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Graph as {"p":..,"q":..,"edges":[[x,y],..]}.
    #[arg(long)]
    graph: Option<String>,
    /// graph6, optionally followed by :MASK (0 = X, 1 = Y).
    #[arg(long)]
    graph6: Option<String>,
    /// Ferrers graph of a partition, e.g. 3,3,2,1.
    #[arg(long)]
    partition: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
struct OptionalGraphArgs {
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    partition: Option<String>,
}

#[derive(Debug, Args)]
struct Scan2Args {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=20), required_unless_present = "a")]
    sum_max: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=14), required_unless_present = "a")]
    n_max: Option<u64>,
    /// One instance: first partition.
    #[arg(long, requires_all = ["b", "lambda"], conflicts_with_all = ["sum_max", "n_max"])]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    /// Comma list of positive rationals, e.g. 2,2,5/2.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Debug, Args)]
struct GlueArgs {
    /// Two graphs (JSON) to combine; omit both for random trials.
    #[arg(long, num_args = 1)]
    graph: Vec<String>,
    #[arg(long, num_args = 1)]
    graph6: Vec<String>,
    /// X vertex of the first graph and vertex of the second (X for glue, Y for join).
    #[arg(long, value_delimiter = ',', num_args = 2, default_values_t = [0usize, 0])]
    at: Vec<usize>,
    /// Join by a new edge instead of identifying vertices.
    #[arg(long)]
    join: bool,
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(2..=9))]
    max_vertices: u64,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

fn read_graph(
    graph: &Option<String>,
    graph6: &Option<String>,
    partition: &Option<String>,
) -> Result<Option<BipartiteGraph>, LabError> {
    Ok(match (graph, graph6, partition) {
        (Some(j), _, _) => Some(parse_graph_json(j)?),
        (_, Some(g), _) => Some(from_graph6(g)?),
        (_, _, Some(p)) => Some(BipartiteGraph::ferrers_from_partition(&parse_partition(p)?)?),
        _ => None,
    })
}

impl GraphArgs {
    fn load(&self) -> Result<BipartiteGraph, LabError> {
        read_graph(&self.graph, &self.graph6, &self.partition).map(|g| g.expect("clap requires one graph flag"))
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, LabError> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t >= 1)
            .ok_or_else(|| LabError::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| LabError::Io(io::Error::other(e)))
}

type Out = CountingWriter<BufWriter<Box<dyn Write>>>;

fn open_out(path: &Option<PathBuf>, keep: Option<u64>) -> Result<Out, LabError> {
    let (sink, start): (Box<dyn Write>, u64) = match (path, keep) {
        (None, _) => (Box::new(io::stdout().lock()), 0),
        (Some(p), None) => (Box::new(File::create(p)?), 0),
        (Some(p), Some(offset)) => {
            let f = OpenOptions::new().write(true).open(p)?;
            let len = f.metadata()?.len();
            if len < offset {
                return Err(LabError::Input(format!(
                    "{} has {len} bytes but the checkpoint expects at least {offset}",
                    p.display()
                )));
            }
            f.set_len(offset)?;
            let mut f = f;
            io::Seek::seek(&mut f, io::SeekFrom::End(0))?;
            (Box::new(f), offset)
        }
    };
    Ok(CountingWriter::new(BufWriter::new(sink), start))
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(findings) => {
            if findings {
                3
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Returns whether anything was found.
fn execute(cli: Cli) -> Result<bool, LabError> {
    match cli.command {
        Command::Verify(args) => verify(&cli.out, args),
        Command::FerrersEq { max_cells } => {
            let report = verify_ferrers_equality(max_cells)?;
            let mut out = open_out(&cli.out, None)?;
            for (lam, t, f) in &report.failures {
                out.json_line(&json!({
                    "type": "record", "partition": lam.parts(), "T": t.to_string(), "F": rational_to_string(f)
                }))?;
            }
            out.json_line(&json!({
                "type": "summary", "command": "ferrers-eq", "max_cells": max_cells,
                "checked": report.checked, "failures": report.failures.len()
            }))?;
            out.flush()?;
            eprintln!("ferrers-eq: {} partitions, {} failures", report.checked, report.failures.len());
            Ok(!report.failures.is_empty())
        }
        Command::Scan2(args) => scan2(&cli.out, args),
        Command::Classify(g) => {
            let g = g.load()?;
            let c = classify(&g)?;
            let mut out = open_out(&cli.out, None)?;
            out.json_line(&ClassifyLine::from(&c))?;
            out.flush()?;
            Ok(c.verdict == Verdict::Bad)
        }
        Command::Treecount(g) => {
            let g = g.load()?;
            let mut out = open_out(&cli.out, None)?;
            out.json_line(&json!({ "T": spanning_tree_count(&g).to_string() }))?;
            out.flush()?;
            Ok(false)
        }
        Command::Spectrum(g) => {
            let g = g.load()?;
            let spec = laplacian_spectrum(&g);
            let mut out = open_out(&cli.out, None)?;
            out.json_line(&json!({
                "eigenvalues": spec.eigenvalues,
                "tolerance": spec.tolerance,
                "consistent": spec.is_consistent(&g),
                "spectral_tree_count": spectral_tree_count(&g).ok(),
            }))?;
            out.flush()?;
            Ok(false)
        }
        Command::Enumerate { max_vertices, prune } => {
            let mut out = open_out(&cli.out, None)?;
            let mut levels = Vec::new();
            for n in 2..=max_vertices as usize {
                let mut classes = 0u64;
                for g in enumerate_connected(n, prune)? {
                    out.json_line(&json!({
                        "type": "record", "n": n, "p": g.p(), "q": g.q(),
                        "key": hex::encode(g.canonical_key()?.as_bytes()), "graph6": to_graph6(&g),
                    }))?;
                    classes += 1;
                }
                levels.push(json!({ "n": n, "classes": classes }));
            }
            out.json_line(&json!({
                "type": "summary", "command": "enumerate", "max_vertices": max_vertices,
                "biconnected_only": prune, "levels": levels
            }))?;
            out.flush()?;
            Ok(false)
        }
        Command::Glue(args) => glue(&cli.out, args),
        Command::Koo { max_vertices, graph } => {
            let mut out = open_out(&cli.out, None)?;
            if let Some(g) = read_graph(&graph.graph, &graph.graph6, &graph.partition)? {
                let c = classify(&g)?;
                let cl = ClassifyLine::from(&c);
                out.json_line(
                    &json!({ "koo_condition": g.koo_condition()?, "T": cl.t, "F": cl.f, "verdict": cl.verdict }),
                )?;
                out.flush()?;
                return Ok(g.koo_condition()? && c.verdict == Verdict::Bad);
            }
            let report = koo_sweep(max_vertices as usize)?;
            for f in &report.counterexamples {
                out.json_line(&GraphLine::new("record", &f.graph, &f.classification))?;
            }
            out.json_line(&json!({
                "type": "summary", "command": "koo", "max_vertices": max_vertices, "graphs": report.graphs,
                "satisfying": report.satisfying, "counterexamples": report.counterexamples.len()
            }))?;
            out.flush()?;
            eprintln!(
                "koo: {} graphs, {} meet the condition, {} bad",
                report.graphs,
                report.satisfying,
                report.counterexamples.len()
            );
            Ok(!report.counterexamples.is_empty())
        }
    }
}

fn verify(out_path: &Option<PathBuf>, args: VerifyArgs) -> Result<bool, LabError> {
    let opts = VerifyOptions {
        max_vertices: args.max_vertices as usize,
        prune: args.prune,
        eps: args.eps,
        shards_per_batch: args.shards as usize,
        checkpoint: args.checkpoint.clone(),
        halt_after: args.halt_after,
    };
    let resume = match (&args.checkpoint, args.resume) {
        (Some(path), true) => Some(checkpoint::load(path)?),
        _ => None,
    };
    if resume.is_some() && out_path.is_none() {
        return Err(LabError::Usage("--resume needs --out to be a file".into()));
    }
    let pool = thread_pool()?;
    let mut out = open_out(out_path, resume.as_ref().map(|c| c.out_offset))?;
    let start = Instant::now();
    match run_verify(&opts, resume, &mut out, &pool)? {
        VerifyOutcome::Halted { batches } => {
            eprintln!("verify: halted after {batches} checkpointed batches");
            Ok(false)
        }
        VerifyOutcome::Finished(s) => {
            for l in &s.levels {
                eprintln!(
                    "n = {:2}: {:7} classes, {} bad, {} tight, min F-T {}",
                    l.n,
                    l.classes,
                    l.bad,
                    l.tight,
                    l.min_gap.as_deref().unwrap_or("-")
                );
            }
            eprintln!(
                "verify: {} classes, {} bad, {} side-check failures in {:.2?}",
                s.classes,
                s.bad_count,
                s.side_check_failures,
                start.elapsed()
            );
            Ok(s.bad_count > 0 || s.side_check_failures > 0)
        }
    }
}

fn scan2(out_path: &Option<PathBuf>, args: Scan2Args) -> Result<bool, LabError> {
    let mut out = open_out(out_path, None)?;
    if let (Some(a), Some(b), Some(lam)) = (&args.a, &args.b, &args.lambda) {
        let inst = Conjecture2Instance::new(parse_partition(a)?, parse_partition(b)?, parse_rational_list(lam)?)
            .map_err(|e| LabError::Input(e.to_string()))?;
        let verdict = check_conjecture2_instance(&inst);
        out.json_line(&Conjecture2Line::new(&inst, &verdict))?;
        out.flush()?;
        return Ok(verdict.is_violated());
    }
    let (sum_max, n_max) = (args.sum_max.expect("clap requires it"), args.n_max.expect("clap requires it") as usize);
    let report = scan_conjecture2_with(sum_max, n_max, |_, _| {});
    for (inst, verdict) in &report.violations {
        out.json_line(&Conjecture2Line::new(inst, verdict))?;
    }
    out.json_line(&json!({
        "type": "summary", "command": "scan2", "sum_max": sum_max, "n_max": n_max,
        "pairs": report.pairs, "instances": report.instances,
        "hypotheses_met": report.hypotheses_met, "violations": report.violations.len()
    }))?;
    out.flush()?;
    eprintln!(
        "scan2: {} instances, {} meet the hypotheses, {} violated",
        report.instances,
        report.hypotheses_met,
        report.violations.len()
    );
    Ok(!report.violations.is_empty())
}

fn glue(out_path: &Option<PathBuf>, args: GlueArgs) -> Result<bool, LabError> {
    let mut graphs = Vec::new();
    for j in &args.graph {
        graphs.push(parse_graph_json(j)?);
    }
    for g in &args.graph6 {
        graphs.push(from_graph6(g)?);
    }
    let mut out = open_out(out_path, None)?;
    match graphs.as_slice() {
        [] => {
            let report = structural_property_sweep(args.max_vertices as usize, args.trials, args.seed)?;
            for f in report.counterexamples.iter().chain(&report.koo.counterexamples) {
                let mut line = serde_json::to_value(GraphLine::new("record", &f.graph, &f.classification))
                    .map_err(io::Error::from)?;
                line["kind"] = f.kind.name().into();
                out.json_line(&line)?;
            }
            out.json_line(&json!({
                "type": "summary", "command": "glue", "max_vertices": args.max_vertices,
                "trials": args.trials, "seed": args.seed, "pool": report.pool,
                "glue_trials": report.glue_trials, "join_trials": report.join_trials,
                "koo_satisfying": report.koo.satisfying, "counterexamples": report.finding_count()
            }))?;
            out.flush()?;
            eprintln!(
                "glue: {} glue and {} join trials over {} good graphs, {} counterexamples",
                report.glue_trials,
                report.join_trials,
                report.pool,
                report.finding_count()
            );
            Ok(report.finding_count() > 0)
        }
        [g1, g2] => {
            let (u, v) = (args.at[0], args.at[1]);
            let g = if args.join { g1.join_by_edge(u, g2, v)? } else { g1.glue_at_vertex(u, g2, v)? };
            let c = classify(&g)?;
            out.json_line(&GraphLine::new(if args.join { "join" } else { "glue" }, &g, &c))?;
            out.flush()?;
            Ok(c.verdict == Verdict::Bad)
        }
        _ => Err(LabError::Usage(format!("glue takes zero or two graphs, got {}", graphs.len()))),
    }
}
