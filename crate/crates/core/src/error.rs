//! Error type shared by every module of the crate.

use crate::graph::VertexId;

/// Failures reported by graph operations, oracles, solvers and generators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The pair passed to an edge operation is not an edge.
    #[error("NotAnEdge: {0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),
    /// A vertex id does not belong to the graph.
    #[error("UnknownVertex: {0}")]
    UnknownVertex(VertexId),
    /// The pattern exceeds the induced-subgraph search bound.
    #[error("PatternTooLarge: pattern has {size} vertices, bound is {bound}")]
    PatternTooLarge { size: usize, bound: usize },
    /// The graph contains an induced P4 where a P4-free graph was required.
    #[error("NotP4Free")]
    NotP4Free,
    /// The graph is disconnected where connectivity was required.
    #[error("NotConnected")]
    NotConnected,
    /// A witness structure references unknown vertices or has an empty bag.
    #[error("MalformedWitness: {0}")]
    MalformedWitness(String),
    /// The host graph exceeds the exhaustive oracle bound.
    #[error("InstanceTooLarge: {n} vertices, bound is {bound}")]
    InstanceTooLarge { n: usize, bound: usize },
    /// The input graph is not a member of the declared graph class.
    #[error("NotInClass: graph contains an induced {0}")]
    NotInClass(String),
    /// Distance reduction was requested although dist(u,v) does not exceed the target.
    #[error("DistanceNotExceeding: dist(u,v)={d}, k={k}")]
    DistanceNotExceeding { d: usize, k: usize },
    /// P3-suitability was requested for an adjacent pair.
    #[error("AdjacentPair: {0} and {1} are adjacent")]
    AdjacentPair(VertexId, VertexId),
    /// The closure core N(u) together with the connector set is not connected.
    #[error("NotConnectedCore")]
    NotConnectedCore,
    /// The uncapped induced-path search was requested on too large a graph.
    #[error("CapTooLargeForExhaustive: {n} vertices, bound is {bound}")]
    CapTooLargeForExhaustive { n: usize, bound: usize },
    /// A linear forest was required.
    #[error("NotLinearForest")]
    NotLinearForest,
    /// The hypergraph has too many elements for exhaustive colouring.
    #[error("TooManyElements: {m} elements, bound is {bound}")]
    TooManyElements { m: usize, bound: usize },
    /// The subdivision parameter must be even and at least 4.
    #[error("OddP: p={0} must be even and at least 4")]
    OddP(usize),
    /// The graph exceeds the brute-force bound.
    #[error("TooLarge: {n} vertices, bound is {bound}")]
    TooLarge { n: usize, bound: usize },
    /// A text input could not be parsed.
    #[error("Parse: line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
