//! `(P1+P5)`-free graphs.
//!
//! With `N(u)` independent, some witness has a set `S` of at most two
//! vertices in its second bag outside `N(u)` with `N(u) ∪ S` connected. The
//! `P4` case is then a 2-constant check and larger `k` peel the `u` end over
//! every such `S`.

use super::{alpha_bags, p4_entry, peel_subsets, suitability, Bags, Ctx, GraphClass, Inst, Solution};
use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::witness::WitnessStructure;

const CLASS: GraphClass = GraphClass::P1P5;
const ALPHA: usize = 2;

pub(super) fn solve(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize) -> Option<Bags> {
    let inst = inst.normalize_u();
    if k == 4 {
        return alpha_bags(&inst, ALPHA);
    }
    peel_subsets(cx, parent, &inst, k, ALPHA)
}

/// `P4`-suitability for a `(P1+P5)`-free graph.
pub fn p4_suitability_p1p5(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<Solution>> {
    p4_entry(g, u, v, CLASS)
}

/// `P5`-suitability for a `(P1+P5)`-free graph.
pub fn p5_suitability_p1p5(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<WitnessStructure>> {
    suitability(g, u, v, 5, CLASS)
}

/// `P6`-suitability for a `(P1+P5)`-free graph.
pub fn p6_suitability_p1p5(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<WitnessStructure>> {
    suitability(g, u, v, 6, CLASS)
}
