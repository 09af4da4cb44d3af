//! Helpers shared by the integration tests.
#![allow(dead_code)]

use contractkit::enumerate::{connected_class_graphs, random_class_graph};
use contractkit::lpc::{longest_path_contractibility_with, LpcOptions};
use contractkit::oracle::{oracle_longest_path_contraction, oracle_suitable_pair};
use contractkit::suitability::{suitability_with, GraphClass, SolveOptions};
use contractkit::{Graph, Mode, VertexId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CLASSES: [GraphClass; 6] =
    [GraphClass::P2P4, GraphClass::P1P2P3, GraphClass::P1P5, GraphClass::SP1P4(0), GraphClass::SP1P4(1), GraphClass::SP1P4(2)];

/// Tally of one oracle-equivalence run.
#[derive(Debug, Default)]
pub struct Tally {
    pub graphs: usize,
    pub calls: usize,
    pub yes: usize,
    pub mismatches: Vec<String>,
}

impl Tally {
    pub fn merge(&mut self, o: Tally) {
        self.graphs += o.graphs;
        self.calls += o.calls;
        self.yes += o.yes;
        self.mismatches.extend(o.mismatches);
    }
}

pub fn nonadjacent_pairs(g: &Graph) -> Vec<(VertexId, VertexId)> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Compares every suitability call and the longest path contraction of `g`
/// with the oracle.
pub fn check_graph(g: &Graph, class: GraphClass) -> Tally {
    let mut t = Tally { graphs: 1, ..Tally::default() };
    let opts = SolveOptions { check_class: false, trace: false };
    let n = g.vertex_count();
    for (u, v) in nonadjacent_pairs(g) {
        for k in 3..=n {
            let ours = suitability_with(g, u, v, k, class, opts).unwrap().witness.is_some();
            let oracle = oracle_suitable_pair(g, u, v, k).unwrap().is_some();
            t.calls += 1;
            t.yes += ours as usize;
            if ours != oracle {
                t.mismatches.push(format!("{class} k={k} u={u} v={v} ours={ours} oracle={oracle} edges={:?}", g.edges()));
            }
        }
    }
    let ours = longest_path_contractibility_with(g, class, LpcOptions { mode: Mode::Sequential, check_class: false }).unwrap().0;
    let oracle = oracle_longest_path_contraction(g).unwrap().0;
    if ours != oracle {
        t.mismatches.push(format!("{class} lpc ours={ours} oracle={oracle} edges={:?}", g.edges()));
    }
    t
}

/// All connected members of `class` with at most `max_n` vertices.
pub fn exhaustive(class: GraphClass, max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| connected_class_graphs(n, class).unwrap()).collect()
}

/// `count` random connected members of `class` with `n` drawn from `sizes`.
pub fn sample(class: GraphClass, sizes: &[usize], count: usize, seed: u64) -> Vec<Graph> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = sizes[rng.gen_range(0..sizes.len())];
        if let Some(g) = random_class_graph(&mut rng, n, class, 400).unwrap() {
            out.push(g);
        }
    }
    out
}
