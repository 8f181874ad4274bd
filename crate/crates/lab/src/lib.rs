//! Files, formats, resumable campaigns and the `ferrers-lab` command line
//! on top of `ferrers-core`.

pub mod checkpoint;
pub mod cli;
pub mod error;
pub mod format;
pub mod output;
pub mod runner;

pub use error::LabError;
