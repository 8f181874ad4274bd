//! Shard-parallel, resumable exhaustive verification.

use std::io::{self, Write};
use std::path::PathBuf;

use ferrers_core::bigraph::shards;
use ferrers_core::campaign::{verify_shard, LevelSummary, VerificationRecord};
use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;

use crate::checkpoint::{self, Checkpoint, LevelProgress, ShardLine, VERSION};
use crate::error::LabError;
use crate::output::{LevelLine, RecordLine, VerifySummary};

/// Counts bytes so checkpoints can record where the output stood.
pub struct CountingWriter<W> {
    inner: W,
    count: u64,
}

impl<W: Write> CountingWriter<W> {
    pub fn new(inner: W, start: u64) -> Self {
        Self { inner, count: start }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn json_line<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut *self, value)?;
        self.write_all(b"\n")
    }
}

impl<W: Write> Write for CountingWriter<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.count += n as u64;
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_vertices: usize,
    pub prune: bool,
    pub eps: f64,
    /// Shards evaluated per checkpointed batch.
    pub shards_per_batch: usize,
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many checkpointed batches, leaving the next batch
    /// written but not checkpointed. Simulates a crash.
    pub halt_after: Option<u64>,
}

#[derive(Debug)]
pub enum VerifyOutcome {
    Finished(VerifySummary),
    Halted { batches: u64 },
}

fn fresh_progress(n: usize) -> Result<LevelProgress, LabError> {
    Ok(LevelProgress {
        n,
        shards_total: shards(n)?.len(),
        shards_done: 0,
        last_shard: None,
        summary: LevelLine::from(&LevelSummary::new(n)),
    })
}

/// Runs levels `2..=max_vertices` in order, streaming record lines to `out`
/// and ending with the summary line. `resume_from` continues a checkpointed
/// run; the caller has already cut the output back to its `out_offset`.
pub fn run_verify<W: Write>(
    opts: &VerifyOptions,
    resume_from: Option<Checkpoint>,
    out: &mut CountingWriter<W>,
    pool: &ThreadPool,
) -> Result<VerifyOutcome, LabError> {
    let snapshot = |levels: &[LevelProgress], out_offset: u64| Checkpoint {
        version: VERSION,
        command: "verify".into(),
        max_vertices: opts.max_vertices,
        prune: opts.prune,
        eps: opts.eps,
        levels: levels.to_vec(),
        out_offset,
    };
    let mut progress = match resume_from {
        Some(ck) => {
            ck.ensure_same_run(opts.max_vertices, opts.prune, opts.eps)?;
            ck.levels
        }
        None => {
            if let Some(path) = &opts.checkpoint {
                checkpoint::save(path, &snapshot(&[], out.count()))?;
            }
            Vec::new()
        }
    };
    let mut batches = 0u64;
    for n in 2..=opts.max_vertices {
        let all = shards(n)?;
        let idx = match progress.iter().position(|l| l.n == n) {
            Some(i) => i,
            None => {
                progress.push(fresh_progress(n)?);
                progress.len() - 1
            }
        };
        if progress[idx].shards_total != all.len() {
            return Err(LabError::Input(format!("checkpoint shard count for n = {n} does not match")));
        }
        let mut summary = LevelSummary::try_from(&progress[idx].summary)?;
        let mut done = progress[idx].shards_done;
        while done < all.len() {
            let batch = &all[done..(done + opts.shards_per_batch).min(all.len())];
            let results: Vec<Vec<VerificationRecord>> = pool.install(|| {
                batch.par_iter().map(|&s| verify_shard(n, s, opts.prune, opts.eps)).collect::<Result<_, _>>()
            })?;
            for r in results.iter().flatten() {
                summary.absorb(r);
                out.json_line(&RecordLine::from(r))?;
            }
            out.flush()?;
            if opts.halt_after == Some(batches) {
                return Ok(VerifyOutcome::Halted { batches });
            }
            done += batch.len();
            let lp = &mut progress[idx];
            lp.shards_done = done;
            lp.last_shard = batch.last().map(|&s| ShardLine::from(s));
            lp.summary = LevelLine::from(&summary);
            if let Some(path) = &opts.checkpoint {
                checkpoint::save(path, &snapshot(&progress, out.count()))?;
            }
            batches += 1;
        }
    }
    let levels = progress.iter().map(|l| LevelSummary::try_from(&l.summary)).collect::<Result<Vec<_>, _>>()?;
    let summary = VerifySummary::new(opts.max_vertices, opts.prune, opts.eps, &levels);
    out.json_line(&summary)?;
    out.flush()?;
    Ok(VerifyOutcome::Finished(summary))
}
