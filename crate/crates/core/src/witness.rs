//! Witness structures and their verification.
//!
//! A witness for `h` in `g` assigns each pattern vertex a bag of host
//! vertices. It is valid when the bags partition `V(g)`, every bag induces a
//! connected subgraph, and two bags are adjacent exactly when their pattern
//! vertices are.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, PatternGraph, VertexId, VertexSet};

/// Bags indexed by pattern vertex in ascending id order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WitnessStructure {
    pub bags: Vec<VertexSet>,
}

/// First violated witness condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A host vertex lies in two bags.
    Overlap { vertex: VertexId, first: usize, second: usize },
    /// A host vertex lies in no bag.
    Uncovered { vertex: VertexId },
    /// A bag does not induce a connected subgraph.
    Disconnected { bag: usize },
    /// Pattern vertices are adjacent but their bags are not.
    MissingEdge { a: usize, b: usize },
    /// Bags are adjacent but their pattern vertices are not.
    ExtraEdge { a: usize, b: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap { vertex, first, second } => {
                write!(f, "partition: vertex {vertex} in bags {first} and {second}")
            }
            Violation::Uncovered { vertex } => write!(f, "partition: vertex {vertex} in no bag"),
            Violation::Disconnected { bag } => write!(f, "connectivity: bag {bag} is disconnected"),
            Violation::MissingEdge { a, b } => write!(f, "adjacency: bags {a} and {b} must be adjacent"),
            Violation::ExtraEdge { a, b } => write!(f, "adjacency: bags {a} and {b} must not be adjacent"),
        }
    }
}

/// Outcome of [`verify_witness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub violation: Option<Violation>,
}

impl WitnessReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

impl WitnessStructure {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        WitnessStructure { bags }
    }

    /// Number of bags.
    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Lifts bags of a contracted graph to its original vertices.
    pub fn lift(&self, g: &Graph) -> WitnessStructure {
        WitnessStructure { bags: self.bags.iter().map(|b| g.lift(b)).collect() }
    }
}

/// Checks the three witness conditions, reporting the first violation.
///
/// Conditions are checked in the order partition, connectivity, adjacency.
pub fn verify_witness(g: &Graph, h: &PatternGraph, w: &WitnessStructure) -> Result<WitnessReport> {
    let hv: Vec<VertexId> = h.vertices().collect();
    if w.bags.len() != hv.len() {
        return Err(Error::MalformedWitness(format!(
            "{} bags for a pattern with {} vertices",
            w.bags.len(),
            hv.len()
        )));
    }
    let mut owner = std::collections::BTreeMap::new();
    for (i, bag) in w.bags.iter().enumerate() {
        if bag.is_empty() {
            return Err(Error::MalformedWitness(format!("bag {i} is empty")));
        }
        for &x in bag {
            if !g.contains(x) {
                return Err(Error::MalformedWitness(format!("bag {i} contains unknown vertex {x}")));
            }
            if let Some(&first) = owner.get(&x) {
                return Ok(WitnessReport { violation: Some(Violation::Overlap { vertex: x, first, second: i }) });
            }
            owner.insert(x, i);
        }
    }
    if let Some(x) = g.vertices().find(|x| !owner.contains_key(x)) {
        return Ok(WitnessReport { violation: Some(Violation::Uncovered { vertex: x }) });
    }
    for (i, bag) in w.bags.iter().enumerate() {
        if !g.is_connected_set(bag) {
            return Ok(WitnessReport { violation: Some(Violation::Disconnected { bag: i }) });
        }
    }
    let k = hv.len();
    let mut touch = vec![vec![false; k]; k];
    for (a, b) in g.edges() {
        let (i, j) = (owner[&a], owner[&b]);
        if i != j {
            touch[i][j] = true;
            touch[j][i] = true;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let want = h.has_edge(hv[i], hv[j]);
            if want && !touch[i][j] {
                return Ok(WitnessReport { violation: Some(Violation::MissingEdge { a: i, b: j }) });
            }
            if !want && touch[i][j] {
                return Ok(WitnessReport { violation: Some(Violation::ExtraEdge { a: i, b: j }) });
            }
        }
    }
    Ok(WitnessReport { violation: None })
}
