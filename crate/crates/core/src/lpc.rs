//! Longest path contractibility on the four tractable classes.
//!
//! For `k` from the class maximum down to 4, every non-adjacent pair is
//! tried as the pair of end bags. Small `k` is settled directly: `P3` by a
//! pair whose removal leaves a connected graph, `P2` by a non-cut vertex.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::par::{self, Mode};
use crate::patterns::path;
use crate::suitability::{self, Ctx, GraphClass, Inst};
use crate::witness::{verify_witness, WitnessStructure};

/// Non-adjacent pairs `u < v`.
fn pairs(g: &Graph) -> Vec<(VertexId, VertexId)> {
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

fn solve_pair(g: &Graph, class: GraphClass, u: VertexId, v: VertexId, k: usize) -> Option<WitnessStructure> {
    let mut cx = Ctx::new(class, false);
    suitability::solve(&mut cx, 0, &Inst::new(g.clone(), u, v), k).map(WitnessStructure::new)
}

/// `[{x}, V - x]` for the smallest non-cut vertex `x`.
fn p2_witness(g: &Graph) -> WitnessStructure {
    let all = g.vertex_set();
    for x in g.vertices() {
        let rest: VertexSet = all.iter().copied().filter(|&y| y != x).collect();
        if g.is_connected_set(&rest) {
            return WitnessStructure::new(vec![VertexSet::from([x]), rest]);
        }
    }
    unreachable!("a connected graph with two or more vertices has a non-cut vertex")
}

fn search(g: &Graph, class: GraphClass, top: usize, mode: Mode) -> Result<(usize, WitnessStructure)> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    if n == 1 {
        return Ok((1, WitnessStructure::new(vec![g.vertex_set()])));
    }
    let g = g.forget_origins();
    let ps = pairs(&g);
    let found = (3..=top.min(n)).rev().find_map(|k| par::find_map_first(mode, &ps, |&(u, v)| solve_pair(&g, class, u, v, k)).map(|w| (k, w)));
    let (k, w) = found.unwrap_or_else(|| (2, p2_witness(&g)));
    let report = verify_witness(&g, &path(k), &w)?;
    assert!(report.is_valid(), "invalid P{k} witness: {:?}", report.violation);
    Ok((k, w))
}

/// Largest `k` such that `g` contracts to `P_k`, with a witness.
pub fn longest_path_contractibility(g: &Graph, class: GraphClass) -> Result<(usize, WitnessStructure)> {
    longest_path_contractibility_with(g, class, LpcOptions::default())
}

/// Options for [`longest_path_contractibility_with`].
#[derive(Clone, Copy, Debug)]
pub struct LpcOptions {
    /// Sequential or parallel sweep over vertex pairs.
    pub mode: Mode,
    /// Verify class membership before solving.
    pub check_class: bool,
}

impl Default for LpcOptions {
    fn default() -> Self {
        LpcOptions { mode: Mode::default(), check_class: true }
    }
}

/// As [`longest_path_contractibility`] with explicit options.
pub fn longest_path_contractibility_with(g: &Graph, class: GraphClass, opts: LpcOptions) -> Result<(usize, WitnessStructure)> {
    if opts.check_class && !class.contains(g)? {
        return Err(Error::NotInClass(class.name()));
    }
    search(g, class, class.max_k(), opts.mode)
}

/// Longest path contraction of an `(sP1+P4)`-free graph, trying `k` from
/// `min(2s+4, n)` downwards.
pub fn lpc_sp1p4(g: &Graph, s: usize) -> Result<(usize, WitnessStructure)> {
    let class = GraphClass::SP1P4(s);
    if !class.contains(g)? {
        return Err(Error::NotInClass(class.name()));
    }
    search(g, class, 2 * s + 4, Mode::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_longest_path_contraction;
    use crate::patterns::{complete, cycle, star};

    #[test]
    fn examples() {
        assert_eq!(longest_path_contractibility(&path(6), GraphClass::P2P4).unwrap().0, 6);
        assert_eq!(longest_path_contractibility(&cycle(6), GraphClass::P2P4).unwrap().0, 2);
        assert_eq!(longest_path_contractibility(&star(3), GraphClass::P1P5).unwrap().0, 3);
        assert_eq!(longest_path_contractibility(&complete(1), GraphClass::P1P5).unwrap().0, 1);
        assert_eq!(longest_path_contractibility(&complete(4), GraphClass::P1P5).unwrap().0, 2);
        assert_eq!(lpc_sp1p4(&path(5), 1).unwrap().0, 5);
        assert_eq!(lpc_sp1p4(&path(6), 1), Err(Error::NotInClass("P1+P4".into())));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(longest_path_contractibility(&two, GraphClass::P1P5), Err(Error::NotConnected));
    }

    #[test]
    fn p4_free_graphs_stay_below_four() {
        for g in [complete(5), star(4), crate::patterns::complete_bipartite(2, 3)] {
            let (k, _) = lpc_sp1p4(&g, 0).unwrap();
            assert!(k <= 3);
            assert_eq!(k, oracle_longest_path_contraction(&g).unwrap().0);
        }
    }

    #[test]
    fn modes_agree() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 3), (4, 6)]);
        let a = longest_path_contractibility_with(&g, GraphClass::P1P2P3, LpcOptions { mode: Mode::Sequential, check_class: true }).unwrap();
        let b = longest_path_contractibility_with(&g, GraphClass::P1P2P3, LpcOptions { mode: Mode::Parallel, check_class: true }).unwrap();
        assert_eq!(a, b);
    }
}
