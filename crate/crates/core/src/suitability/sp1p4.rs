//! `(sP1+P4)`-free graphs.
//!
//! Every solution is α-constant on the `u` side with
//! `α = (s+2)(2s+4)`. The `P4` case is an α-constant check; larger `k`
//! guess the small connected part of the second bag, add its closure, and
//! peel the `u` end.

use super::{alpha_bags, peel_subsets, suitability, Bags, Ctx, GraphClass, Inst};
use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::witness::WitnessStructure;

/// `α = (s+2)(2s+4)`.
pub fn sp1p4_alpha(s: usize) -> usize {
    (s + 2) * (2 * s + 4)
}

pub(super) fn solve(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize, s: usize) -> Option<Bags> {
    let inst = inst.normalize_u();
    if k == 4 {
        return alpha_bags(&inst, sp1p4_alpha(s));
    }
    peel_subsets(cx, parent, &inst, k, sp1p4_alpha(s))
}

/// `P_k`-suitability for an `(sP1+P4)`-free graph.
pub fn pk_suitability_sp1p4(g: &Graph, u: VertexId, v: VertexId, k: usize, s: usize) -> Result<Option<WitnessStructure>> {
    suitability(g, u, v, k, GraphClass::SP1P4(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::patterns::{complete_bipartite, cycle, path};

    #[test]
    fn alpha_values() {
        assert_eq!(sp1p4_alpha(0), 8);
        assert_eq!(sp1p4_alpha(1), 18);
        assert_eq!(sp1p4_alpha(2), 32);
    }

    #[test]
    fn small_cases() {
        assert!(pk_suitability_sp1p4(&path(5), 0, 4, 5, 1).unwrap().is_some());
        assert!(pk_suitability_sp1p4(&path(4), 0, 3, 4, 1).unwrap().is_some());
        assert!(pk_suitability_sp1p4(&cycle(5), 0, 2, 4, 1).unwrap().is_none());
        // P4-free input cannot reach P4
        assert!(pk_suitability_sp1p4(&complete_bipartite(2, 3), 0, 1, 4, 0).unwrap().is_none());
        assert_eq!(pk_suitability_sp1p4(&path(6), 0, 5, 6, 1), Err(Error::NotInClass("P1+P4".into())));
    }
}
