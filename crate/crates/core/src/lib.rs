//! Path contraction on H-free graph classes.
//!
//! The crate bundles an immutable graph type with contraction provenance,
//! exhaustive contraction oracles, the polynomial P_k-suitability solvers
//! for four H-free classes, longest induced path search, hardness gadgets
//! built from hypergraphs, and a complexity classifier for patterns.

pub mod bits;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod hardness;
pub mod induced_path;
pub mod io;
pub mod lpc;
pub mod matching;
pub mod oracle;
pub mod par;
pub mod patterns;
pub mod suitability;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Graph, PatternGraph, VertexId, VertexSet};
pub use par::Mode;
pub use witness::{verify_witness, WitnessStructure};
