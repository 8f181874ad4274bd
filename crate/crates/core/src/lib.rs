//! Exact tools for the Ferrers bound on spanning trees of bipartite graphs.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation: partitions and majorization, bitset bipartite graphs with
//! isomorph-free enumeration, Matrix-Tree counting in big integers, Laplacian
//! spectra, and the campaign drivers that tie them together. File formats,
//! checkpointing and the command line live in the `ferrers-lab` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bigraph;
pub mod campaign;
pub mod exact;
pub mod partition;
pub mod spectral;

#[cfg(test)]
pub(crate) mod oracle;

pub use bigraph::{BipartiteGraph, CanonicalKey, GraphError, Vertex};
pub use exact::{Classification, Verdict};
pub use partition::{Partition, WeakSeq};
