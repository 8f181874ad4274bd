//! Campaign checkpoints.
//!
//! A checkpoint names the run parameters, how many shards of each level are
//! done (and the last one), the per-level accumulators, and the byte length
//! of the output at that moment. Saves go to a sibling temporary file that
//! is then renamed over the target, so a reader never sees a torn file.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use ferrers_core::bigraph::ShardId;
use serde::{Deserialize, Serialize};

use crate::error::LabError;
use crate::output::LevelLine;

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardLine {
    pub p: usize,
    pub first: u64,
    pub second: Option<u64>,
}

impl From<ShardId> for ShardLine {
    fn from(s: ShardId) -> Self {
        Self { p: s.p, first: s.first, second: s.second }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelProgress {
    pub n: usize,
    pub shards_total: usize,
    pub shards_done: usize,
    pub last_shard: Option<ShardLine>,
    pub summary: LevelLine,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    pub command: String,
    pub max_vertices: usize,
    pub prune: bool,
    pub eps: f64,
    pub levels: Vec<LevelProgress>,
    pub out_offset: u64,
}

impl Checkpoint {
    /// Errors unless `other` was written by a run with the same parameters.
    pub fn ensure_same_run(&self, max_vertices: usize, prune: bool, eps: f64) -> Result<(), LabError> {
        if self.version != VERSION || self.command != "verify" {
            return Err(LabError::Input(format!(
                "checkpoint version {} / {:?} not understood",
                self.version, self.command
            )));
        }
        if (self.max_vertices, self.prune, self.eps) != (max_vertices, prune, eps) {
            return Err(LabError::Input(format!(
                "checkpoint was written with --max-vertices {} --eps {}{}",
                self.max_vertices,
                self.eps,
                if self.prune { " --prune" } else { "" }
            )));
        }
        Ok(())
    }
}

fn tmp_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".tmp");
    path.with_file_name(name)
}

pub fn save(path: &Path, ck: &Checkpoint) -> Result<(), LabError> {
    let tmp = tmp_path(path);
    let mut f = fs::File::create(&tmp)?;
    serde_json::to_writer_pretty(&mut f, ck).map_err(std::io::Error::from)?;
    f.write_all(b"\n")?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Checkpoint, LabError> {
    let text = fs::read_to_string(path)
        .map_err(|e| LabError::Input(format!("cannot read checkpoint {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| LabError::Input(format!("malformed checkpoint {}: {e}", path.display())))
}
