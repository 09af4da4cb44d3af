//! `(P1+P2+P3)`-free graphs.
//!
//! Without an 8-constant solution every solution is independent, and each
//! covering vertex has exactly one private neighbour. Guessing two covering
//! vertices per side identifies `w_u` and `w_v`; forced placements then
//! leave a star cover problem solved by maximum matching. Larger `k` peel an
//! end whose second bag is determined by one guessed vertex.

use super::{alpha_bags, p4_entry, peel_all, peel_connectors, reduce_inner, suitability, Bags, Ctx, GraphClass, Inst, Side, Solution};
use crate::error::Result;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::matching::{maximum_matching, BipartiteGraph};
use crate::witness::WitnessStructure;

const CLASS: GraphClass = GraphClass::P1P2P3;
const ALPHA: usize = 8;

pub(super) fn solve(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize) -> Option<Bags> {
    match k {
        4 => p4(cx, parent, inst),
        5 => p5(cx, parent, inst),
        6 => p6(cx, parent, inst),
        _ => p7(cx, parent, inst),
    }
}

/// Peels a singleton neighbourhood at either end, if there is one.
fn peel_singleton(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize) -> Option<Option<Bags>> {
    for side in [Side::U, Side::V] {
        let i = if side == Side::U { inst.clone() } else { inst.swap() };
        if i.nu().len() == 1 {
            let label = format!("peel:{}:S={{}}", if side == Side::U { "u" } else { "v" });
            return Some(peel_all(cx, parent, inst, side, k, [(VertexSet::new(), label)]));
        }
    }
    None
}

fn p5(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    let inst = inst.normalize_ends();
    if let Some(r) = peel_singleton(cx, parent, &inst, 5) {
        return r;
    }
    let d = inst.dist()?;
    if d > 4 {
        for (child, label) in reduce_inner(&inst, 5).ok()? {
            let id = cx.child(parent, || label);
            if let Some(b) = super::solve(cx, id, &child, 5) {
                return Some(b);
            }
        }
        return None;
    }
    // M: the middle layer, which lies in the third bag
    let du = inst.g.bfs_distances(inst.u);
    let dv = inst.g.bfs_distances(inst.v);
    let cands: Vec<VertexId> = du.iter().filter(|&(x, &d)| d == 2 && dv.get(x) != Some(&2)).map(|(&x, _)| x).collect();
    peel_connectors(cx, parent, &inst, 5, cands)
}

fn p6(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    let inst = inst.normalize_ends();
    if let Some(r) = peel_singleton(cx, parent, &inst, 6) {
        return r;
    }
    let cands: Vec<VertexId> = inst.t().into_iter().collect();
    peel_connectors(cx, parent, &inst, 6, cands)
}

fn p7(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    let inst = inst.normalize_u();
    if inst.nu().len() != 1 {
        return None;
    }
    peel_all(cx, parent, &inst, Side::U, 7, [(VertexSet::new(), "peel:u:S={}".to_string())])
}

/// Pairs `s < s'` in `T` that can be two covering vertices of the `u`
/// side: non-adjacent, each with exactly one neighbour in
/// `Q = N(u) \ (N(s) ∩ N(s'))`, the two private neighbours distinct, and a
/// nonempty common neighbourhood in `N(u)`.
fn cover_pairs(inst: &Inst) -> Vec<(VertexId, VertexId)> {
    let t: Vec<VertexId> = inst.t().into_iter().collect();
    let nu = inst.nu();
    let mut out = Vec::new();
    for (i, &s) in t.iter().enumerate() {
        for &s2 in &t[i + 1..] {
            if inst.g.has_edge(s, s2) {
                continue;
            }
            let a: VertexSet = inst.g.neighbors(s).intersection(nu).copied().collect();
            let b: VertexSet = inst.g.neighbors(s2).intersection(nu).copied().collect();
            let common: VertexSet = a.intersection(&b).copied().collect();
            let pa: Vec<_> = a.difference(&common).collect();
            let pb: Vec<_> = b.difference(&common).collect();
            if !common.is_empty() && pa.len() == 1 && pb.len() == 1 {
                out.push((s, s2));
            }
        }
    }
    out
}

enum Step {
    Discard,
    Absorb(Side, VertexId),
}

/// One forced placement for a vertex of `T`, if any applies.
fn forced_step(inst: &Inst, wu: VertexId, wv: VertexId) -> Option<Step> {
    for z in inst.t() {
        let nz = inst.g.neighbors(z);
        let au = nz.intersection(inst.nu()).filter(|&&x| x != wu).count();
        let av = nz.intersection(inst.nv()).filter(|&&x| x != wv).count();
        let (hu, hv) = (nz.contains(&wu), nz.contains(&wv));
        let step = match (hu, hv) {
            (false, false) => Step::Discard,
            (false, true) if av >= 2 => Step::Discard,
            (false, true) => Step::Absorb(Side::V, z),
            (true, false) if au >= 2 => Step::Discard,
            (true, false) => Step::Absorb(Side::U, z),
            _ if au + av <= 1 => Step::Absorb(if au == 1 { Side::U } else { Side::V }, z),
            _ if au >= 2 && av >= 2 => Step::Discard,
            _ if au >= 2 => Step::Absorb(Side::V, z),
            _ if av >= 2 => Step::Absorb(Side::U, z),
            _ => continue,
        };
        return Some(step);
    }
    None
}

fn p4(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    let inst = inst.normalize_ends();
    if let Some(b) = alpha_bags(&inst, super::shortcut_alpha(ALPHA)) {
        return Some(b);
    }
    let ups = cover_pairs(&inst);
    let vps = cover_pairs(&inst.swap());
    for &(s, s2) in &ups {
        for &(t, t2) in &vps {
            if [s, s2].iter().any(|x| *x == t || *x == t2) {
                continue;
            }
            let id = cx.child(parent, || format!("B:s={s},s'={s2},t={t},t'={t2}"));
            let child = inst.absorb(Side::U, &VertexSet::from([s, s2])).absorb(Side::V, &VertexSet::from([t, t2]));
            if let Some(b) = endgame(cx, id, child, s, t) {
                return Some(b);
            }
        }
    }
    None
}

/// Forced placements followed by the matching, with `w_u` and `w_v`
/// tracked through the vertices `s` and `t` merged into them.
fn endgame(_cx: &mut Ctx, _id: usize, mut inst: Inst, s: VertexId, t: VertexId) -> Option<Bags> {
    loop {
        let (wu, wv) = (inst.rep(s), inst.rep(t));
        match forced_step(&inst, wu, wv) {
            None => break,
            Some(Step::Discard) => return None,
            Some(Step::Absorb(side, z)) => inst = inst.absorb(side, &VertexSet::from([z])),
        }
    }
    let (wu, wv) = (inst.rep(s), inst.rep(t));
    star_cover(&inst, wu, wv)
}

/// Matches every vertex of `N(u) ∪ N(v)` other than `w_u`, `w_v` to a
/// distinct vertex of `T`; matched vertices join the side of their partner.
pub(super) fn star_cover(inst: &Inst, wu: VertexId, wv: VertexId) -> Option<Bags> {
    let t = inst.t();
    let mut left: VertexSet = inst.nu().union(inst.nv()).copied().collect();
    left.remove(&wu);
    left.remove(&wv);
    let edges: Vec<(VertexId, VertexId)> =
        left.iter().flat_map(|&w| inst.g.neighbors(w).intersection(&t).map(move |&z| (w, z))).collect();
    let m = maximum_matching(&BipartiteGraph::new(left.clone(), t.clone(), edges));
    if m.len() != left.len() {
        return None;
    }
    let s_u: VertexSet = m.pairs.iter().filter(|(w, _)| inst.nu().contains(w)).map(|(_, &z)| z).collect();
    let s_v: VertexSet = t.difference(&s_u).copied().collect();
    inst.checked_p4(&s_u, &s_v)
}

/// `P4`-suitability for a `(P1+P2+P3)`-free graph.
pub fn p4_suitability_p1p2p3(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<Solution>> {
    p4_entry(g, u, v, CLASS)
}

/// `P5`-suitability for a `(P1+P2+P3)`-free graph.
pub fn p5_suitability_p1p2p3(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<WitnessStructure>> {
    suitability(g, u, v, 5, CLASS)
}

/// `P6`-suitability for a `(P1+P2+P3)`-free graph.
pub fn p6_suitability_p1p2p3(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<WitnessStructure>> {
    suitability(g, u, v, 6, CLASS)
}

/// `P7`-suitability for a `(P1+P2+P3)`-free graph.
pub fn p7_suitability_p1p2p3(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<WitnessStructure>> {
    suitability(g, u, v, 7, CLASS)
}
