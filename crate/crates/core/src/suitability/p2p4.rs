//! `(P2+P4)`-free graphs.
//!
//! The `P4` solver first makes `G[T]` free of induced `P4` by branching on
//! the sides of one induced `P4` and its connectors, then rules out
//! 7-constant and double-sided solutions. A solution with `S_u` independent
//! is found by guessing two covering vertices (which identifies `w_u`),
//! removing `K3+P1` and triangles from `G[T]`, branching until `T` is an
//! independent set, and finishing with a matching. The same search with the
//! ends swapped covers solutions with `S_v` independent.

use std::collections::HashSet;

use super::{alpha_bags, p4_entry, peel_all, peel_connectors, reduce_inner, suitability, Bags, Ctx, GraphClass, Inst, MemoKey, Side, Solution};
use crate::error::Result;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::matching::{maximum_matching, BipartiteGraph};
use crate::patterns::{complete, disjoint_union, path};
use crate::witness::WitnessStructure;

const CLASS: GraphClass = GraphClass::P2P4;
const ALPHA: usize = 7;

/// The constant of the shortcut checks; tests lower it to reach the deep phases.
fn alpha_limit() -> usize {
    super::shortcut_alpha(ALPHA)
}
/// Inner vertices allowed on a Branching I connector path.
const MAX_CONNECTOR: usize = 4;

pub(super) fn solve(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize) -> Option<Bags> {
    match k {
        4 => p4(cx, parent, inst),
        5 => p5(cx, parent, inst),
        _ => p6(cx, parent, inst),
    }
}

fn peel_single_u(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize) -> Option<Option<Bags>> {
    (inst.nu().len() == 1).then(|| peel_all(cx, parent, inst, Side::U, k, [(VertexSet::new(), "peel:u:S={}".to_string())]))
}

fn p5(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    let inst = inst.normalize_ends();
    if let Some(r) = peel_single_u(cx, parent, &inst, 5) {
        return r;
    }
    if inst.dist()? > 4 {
        for (child, label) in reduce_inner(&inst, 5).ok()? {
            let id = cx.child(parent, || label);
            if let Some(b) = super::solve(cx, id, &child, 5) {
                return Some(b);
            }
        }
        return None;
    }
    // Z: the middle layer, which lies in the third bag
    let du = inst.g.bfs_distances(inst.u);
    let dv = inst.g.bfs_distances(inst.v);
    let cands: Vec<VertexId> = inst.t().into_iter().filter(|x| !(du.get(x) == Some(&2) && dv.get(x) == Some(&2))).collect();
    peel_connectors(cx, parent, &inst, 5, cands)
}

fn p6(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    let inst = inst.normalize_ends();
    if let Some(r) = peel_single_u(cx, parent, &inst, 6) {
        return r;
    }
    let cands: Vec<VertexId> = inst.t().into_iter().collect();
    peel_connectors(cx, parent, &inst, 6, cands)
}

// ---- P4: phases 0 to 2 -------------------------------------------------------

fn induced_p4(g: &Graph, s: &VertexSet) -> Option<Vec<VertexId>> {
    g.induced_subgraph(s).contains_induced(&path(4)).expect("P4 is a small pattern")
}

fn p4(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    if inst.dist()? < 3 {
        return None;
    }
    let inst = inst.normalize_ends();
    let t = inst.t();
    if let Some(a) = induced_p4(&inst.g, &t) {
        let rest: VertexSet = t.iter().copied().filter(|x| !a.contains(x)).collect();
        if induced_p4(&inst.g, &rest).is_some() {
            // both P4s cover N(u) and N(v), so a 4-constant solution exists
            if let Some(b) = alpha_bags(&inst, 4) {
                return Some(b);
            }
        }
        return branching_one(cx, parent, &inst, [a[0], a[1], a[2], a[3]]);
    }
    core(cx, parent, &inst)
}

/// Induced paths `x, p_1, .., p_j` in `G[T]` with `1 <= j <= 4`, whose last
/// vertex alone touches `N(side)`.
fn connector_paths(inst: &Inst, side: Side, x: VertexId) -> Vec<VertexSet> {
    let t = inst.t();
    let nside = inst.g.neighbors(inst.end(side)).clone();
    let touches = |y: VertexId| !inst.g.neighbors(y).is_disjoint(&nside);
    let mut out = Vec::new();
    let mut cur = vec![x];
    fn rec(inst: &Inst, t: &VertexSet, touches: &dyn Fn(VertexId) -> bool, cur: &mut Vec<VertexId>, out: &mut Vec<VertexSet>) {
        let last = *cur.last().unwrap();
        if cur.len() > 1 && touches(last) {
            out.push(cur.iter().copied().collect());
            return;
        }
        if cur.len() > MAX_CONNECTOR {
            return;
        }
        for &y in inst.g.neighbors(last) {
            if !t.contains(&y) || cur.contains(&y) {
                continue;
            }
            // induced: y sees only the last vertex of the path
            if cur[..cur.len() - 1].iter().any(|&p| inst.g.has_edge(p, y)) {
                continue;
            }
            cur.push(y);
            rec(inst, t, touches, cur, out);
            cur.pop();
        }
    }
    rec(inst, &t, &touches, &mut cur, &mut out);
    out
}

/// Side of the neighbourhood that absorbed `x`, if `x` has left `T`.
fn absorbed_side(inst: &Inst, x: VertexId) -> Option<Side> {
    let r = inst.rep(x);
    if inst.nu().contains(&r) {
        Some(Side::U)
    } else if inst.nv().contains(&r) {
        Some(Side::V)
    } else {
        None
    }
}

/// Branching I: each `a_i` goes to a side, joined to that side by a
/// connector path when not already adjacent. Children are deduplicated.
fn branching_one(cx: &mut Ctx, parent: usize, inst: &Inst, a: [VertexId; 4]) -> Option<Bags> {
    fn dfs(inst: &Inst, a: &[VertexId; 4], i: usize, sides: &mut String, seen: &mut HashSet<MemoKey>, out: &mut Vec<(Inst, String)>) {
        if i == 4 {
            if seen.insert(inst.memo_key(4)) {
                out.push((inst.clone(), format!("I:sides={sides}")));
            }
            return;
        }
        let x = a[i];
        for (side, tag) in [(Side::U, 'u'), (Side::V, 'v')] {
            sides.push(tag);
            match absorbed_side(inst, x) {
                Some(s) if s == side => dfs(inst, a, i + 1, sides, seen, out),
                Some(_) => {}
                None => {
                    let nside = inst.g.neighbors(inst.end(side));
                    if !inst.g.neighbors(x).is_disjoint(nside) {
                        dfs(&inst.absorb(side, &VertexSet::from([x])), a, i + 1, sides, seen, out);
                    } else {
                        for p in connector_paths(inst, side, x) {
                            dfs(&inst.absorb(side, &p), a, i + 1, sides, seen, out);
                        }
                    }
                }
            }
            sides.pop();
        }
    }
    let mut children = Vec::new();
    dfs(inst, &a, 0, &mut String::new(), &mut HashSet::new(), &mut children);
    for (child, label) in children {
        let id = cx.child(parent, || label);
        if let Some(b) = core(cx, id, &child) {
            return Some(b);
        }
    }
    None
}

/// Phases 2 to 4 on an instance with `G[T]` free of induced `P4`.
fn core(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    if let Some(b) = alpha_bags(inst, alpha_limit()) {
        return Some(b);
    }
    if let Some(b) = u_feasibility(cx, parent, inst) {
        return Some(b);
    }
    let mut b = u_feasibility(cx, parent, &inst.swap())?;
    b.reverse();
    Some(b)
}

// ---- phase 3: u-feasibility --------------------------------------------------

/// Instance with the tracked vertex `w_u` (followed through contractions by
/// a vertex merged into it) and the explicit set `T_2`.
#[derive(Clone, Debug)]
struct St {
    inst: Inst,
    wu: VertexId,
    t2: VertexSet,
}

impl St {
    fn wu(&self) -> VertexId {
        self.inst.rep(self.wu)
    }

    fn t1(&self) -> VertexSet {
        self.inst.t().difference(&self.t2).copied().collect()
    }

    fn with_inst(&self, inst: Inst) -> St {
        let t = inst.t();
        let t2 = self.t2.iter().map(|&y| inst.rep(y)).filter(|y| t.contains(y)).collect();
        St { inst, wu: self.wu, t2 }
    }

    fn absorb(&self, side: Side, x: &VertexSet) -> St {
        self.with_inst(self.inst.absorb(side, x))
    }

    fn touches_nv(&self, y: VertexId) -> bool {
        !self.inst.g.neighbors(y).is_disjoint(self.inst.nv())
    }

    fn touches_nu(&self, y: VertexId) -> bool {
        !self.inst.g.neighbors(y).is_disjoint(self.inst.nu())
    }

    /// Restores `T_2` independent and anticomplete to `N(v)`: vertices with
    /// a neighbour in `N(v)` join `S_v` and edges inside `T_2` are contracted.
    fn normalize_t2(mut self) -> St {
        loop {
            if let Some(&y) = self.t2.iter().find(|&&y| self.touches_nv(y)) {
                self = self.absorb(Side::V, &VertexSet::from([y]));
                continue;
            }
            let edge = self.t2.iter().find_map(|&y| self.inst.g.neighbors(y).iter().find(|z| self.t2.contains(z)).map(|&z| (y, z)));
            match edge {
                Some((y, z)) => {
                    let g = self.inst.g.contract_edge(y, z).unwrap();
                    self = self.with_inst(Inst::new(g, self.inst.u, self.inst.v));
                }
                None => return self,
            }
        }
    }

    /// Puts `t` into `S_u`; its neighbours in `T` not in `T_2` go to `S_v`,
    /// directly when they touch `N(v)` and through `T_2` otherwise.
    fn place_u(&self, t: VertexId, nbr_scope: &VertexSet) -> St {
        let nbrs: Vec<VertexId> = self.inst.g.neighbors(t).intersection(nbr_scope).copied().collect();
        let mut st = self.absorb(Side::U, &VertexSet::from([t]));
        for y in nbrs {
            let y = st.inst.rep(y);
            if !st.inst.t().contains(&y) {
                continue;
            }
            if st.touches_nv(y) {
                st = st.absorb(Side::V, &VertexSet::from([y]));
            } else {
                st.t2.insert(y);
            }
        }
        st.normalize_t2()
    }

    fn alpha(&self, a: usize) -> Option<Bags> {
        alpha_bags(&self.inst, a)
    }
}

/// Pairs `s < s'` in `T` as guessed in Branching II (and VII on the other
/// side): non-adjacent, each with a private neighbour in `N(side)`, with a
/// common neighbour, and not covering `N(side)` together.
fn private_pairs(inst: &Inst) -> Vec<(VertexId, VertexId)> {
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
            let covers = a.union(&b).count() == nu.len();
            if a.is_disjoint(&b) || a.is_subset(&b) || b.is_subset(&a) || covers {
                continue;
            }
            out.push((s, s2));
        }
    }
    out
}

fn u_feasibility(cx: &mut Ctx, parent: usize, inst: &Inst) -> Option<Bags> {
    for (s, s2) in private_pairs(inst) {
        let id = cx.child(parent, || format!("II:s={s},s'={s2}"));
        let mut st = St { inst: inst.absorb(Side::U, &VertexSet::from([s, s2])), wu: s, t2: VertexSet::new() };
        st.t2 = st.inst.t().difference(st.inst.g.neighbors(st.wu())).copied().collect();
        st = st.normalize_t2();
        if let Some(b) = st.alpha(alpha_limit()) {
            return Some(b);
        }
        st = eliminate_k3_p1(st);
        for t in st.t1() {
            let id3 = cx.child(id, || format!("III:t={t}"));
            let c = st.place_u(t, &st.t1());
            if let Some(b) = c.alpha(alpha_limit()) {
                return Some(b);
            }
            if let Some(b) = phase_3b(cx, id3, c) {
                return Some(b);
            }
        }
    }
    None
}

/// Removes every induced `K3+P1` of `G[T]` by settling its isolated vertex.
fn eliminate_k3_p1(mut st: St) -> St {
    let k3p1 = disjoint_union(&[complete(3), path(1)]);
    loop {
        let t = st.inst.t();
        let Some(m) = st.inst.g.induced_subgraph(&t).contains_induced(&k3p1).expect("small pattern") else {
            return st;
        };
        let y = m[3];
        if st.touches_nu(y) {
            st = st.absorb(Side::U, &VertexSet::from([y]));
        } else {
            let Some(&x) = st.inst.g.neighbors(y).iter().find(|z| t.contains(z)) else { return st };
            st.t2.remove(&y);
            let g = st.inst.g.contract_edge(x, y).unwrap();
            st = st.with_inst(Inst::new(g, st.inst.u, st.inst.v));
        }
        st = st.normalize_t2();
    }
}

/// Phase 3b: branch until `G[T]` has at most one nontrivial component
/// structure that forces independent solutions, then search for private ones.
fn phase_3b(cx: &mut Ctx, parent: usize, st: St) -> Option<Bags> {
    let t = st.inst.t();
    let nontrivial: Vec<VertexSet> = st.inst.g.components_within(&t).into_iter().filter(|c| c.len() > 1).collect();
    if nontrivial.len() != 1 {
        return phase_3c(cx, parent, &st);
    }
    let d1 = &nontrivial[0];
    let outside: VertexSet = st.t2.difference(d1).copied().collect();
    if !outside.is_empty() {
        return phase_3b(cx, parent, st.absorb(Side::U, &outside));
    }
    let t1d: VertexSet = d1.difference(&st.t2).copied().collect();
    let blocks = st.inst.g.components_within(&t1d);
    let t2d: VertexSet = d1.intersection(&st.t2).copied().collect();
    if blocks.len() == 1 {
        let b1 = &blocks[0];
        if b1.len() == 1 {
            let ts = *b1.iter().next().unwrap();
            if !st.touches_nv(ts) {
                return None;
            }
            let mut x = t2d.clone();
            x.insert(ts);
            let id = cx.child(parent, || format!("IV:t*={ts}"));
            return phase_3c(cx, id, &st.absorb(Side::V, &x));
        }
        // Branching IV, plus the branch where B1 lies inside S_v
        for &t in b1 {
            let mut partners = vec![None];
            partners.extend(b1.iter().filter(|&&y| y != t && !st.inst.g.has_edge(t, y) && st.touches_nv(y)).map(|&y| Some(y)));
            for p in partners {
                let id = cx.child(parent, || format!("IV:t={t},t'={p:?}"));
                let mut c = st.clone();
                if let Some(y) = p {
                    c = c.absorb(Side::V, &VertexSet::from([y]));
                }
                let c = c.place_u(t, &c.inst.t());
                if let Some(b) = c.alpha(alpha_limit()).or_else(|| phase_3b(cx, id, c)) {
                    return Some(b);
                }
            }
        }
        if b1.iter().any(|&y| st.touches_nv(y)) {
            let id = cx.child(parent, || "IV:B1->S_v".to_string());
            let all: VertexSet = d1.clone();
            if let Some(b) = phase_3c(cx, id, &st.absorb(Side::V, &all)) {
                return Some(b);
            }
        }
        return None;
    }
    // p >= 2: T_2 is complete to T_1 ∩ D_1; Branching V
    for &t in &t1d {
        if !st.touches_nv(t) {
            continue;
        }
        let id = cx.child(parent, || format!("V:t={t}"));
        let mut x = t2d.clone();
        x.insert(t);
        let mut c = st.absorb(Side::V, &x);
        c.t2.clear();
        if let Some(b) = branching_six(cx, id, c) {
            return Some(b);
        }
    }
    None
}

/// Branching VI on the only nontrivial component of `G[T]`, if any.
fn branching_six(cx: &mut Ctx, parent: usize, st: St) -> Option<Bags> {
    let t = st.inst.t();
    let nontrivial: Vec<VertexSet> = st.inst.g.components_within(&t).into_iter().filter(|c| c.len() > 1).collect();
    if nontrivial.len() != 1 {
        return phase_3c(cx, parent, &st);
    }
    let b1 = &nontrivial[0];
    for &t0 in b1 {
        let nbrs: VertexSet = st.inst.g.neighbors(t0).intersection(b1).copied().collect();
        let base = st.absorb(Side::U, &VertexSet::from([t0]));
        let mut partners = vec![None];
        partners.extend(b1.iter().filter(|&&y| y != t0 && !nbrs.contains(&y) && st.touches_nv(y)).map(|&y| Some(y)));
        for p in partners {
            let mut c = base.clone();
            if let Some(y) = p {
                c = c.absorb(Side::V, &VertexSet::from([y]));
            }
            let mut stuck = false;
            for &y in &nbrs {
                let y = c.inst.rep(y);
                if !c.inst.t().contains(&y) {
                    continue;
                }
                if c.touches_nv(y) {
                    c = c.absorb(Side::V, &VertexSet::from([y]));
                } else {
                    stuck = true;
                }
            }
            if stuck {
                continue;
            }
            let id = cx.child(parent, || format!("VI:t={t0},t'={p:?}"));
            if let Some(b) = phase_3c(cx, id, &c) {
                return Some(b);
            }
        }
    }
    if b1.iter().any(|&y| st.touches_nv(y)) {
        let id = cx.child(parent, || "VI:B1'->S_v".to_string());
        return phase_3c(cx, id, &st.absorb(Side::V, b1));
    }
    None
}

// ---- phase 3c and 3d: private solutions ------------------------------------

/// Instance with both tracked vertices `w_u` and `w_v`.
#[derive(Clone, Debug)]
struct Priv {
    inst: Inst,
    wu: VertexId,
    wv: VertexId,
}

/// Result of a forcing pass.
enum Pass {
    Done(Priv),
    Changed(Priv),
    Discard,
    Found(Bags),
}

impl Priv {
    fn wu(&self) -> VertexId {
        self.inst.rep(self.wu)
    }

    fn wv(&self) -> VertexId {
        self.inst.rep(self.wv)
    }

    fn w(&self, side: Side) -> VertexId {
        match side {
            Side::U => self.wu(),
            Side::V => self.wv(),
        }
    }

    fn n(&self, side: Side) -> &VertexSet {
        self.inst.g.neighbors(self.inst.end(side))
    }

    /// `N(side) \ {w_side}`.
    fn q(&self, side: Side) -> VertexSet {
        let w = self.w(side);
        self.n(side).iter().copied().filter(|&x| x != w).collect()
    }

    fn absorb(&self, side: Side, x: &VertexSet) -> Priv {
        Priv { inst: self.inst.absorb(side, x), wu: self.wu, wv: self.wv }
    }

    /// Applies a batch of forced placements. Vertices forced to one side
    /// that are adjacent, or share a neighbour in `N(side) \ {w_side}`,
    /// cannot both be covering vertices of an independent solution.
    fn force(&self, fu: &VertexSet, fv: &VertexSet, check_shared: bool) -> Pass {
        for (side, f) in [(Side::U, fu), (Side::V, fv)] {
            let q = self.q(side);
            for &a in f {
                for &b in f.range(a + 1..) {
                    let shared = check_shared && self.inst.g.neighbors(a).intersection(self.inst.g.neighbors(b)).any(|x| q.contains(x));
                    if self.inst.g.has_edge(a, b) || shared {
                        return Pass::Discard;
                    }
                }
            }
        }
        if fu.is_empty() && fv.is_empty() {
            return Pass::Done(self.clone());
        }
        let next = self.absorb(Side::U, fu).absorb(Side::V, fv);
        match alpha_bags(&next.inst, 1) {
            Some(b) => Pass::Found(b),
            None => Pass::Changed(next),
        }
    }
}

fn run(mut p: Priv, step: impl Fn(&Priv) -> Pass) -> std::result::Result<Priv, Option<Bags>> {
    loop {
        match step(&p) {
            Pass::Done(q) => return Ok(q),
            Pass::Changed(q) => p = q,
            Pass::Discard => return Err(None),
            Pass::Found(b) => return Err(Some(b)),
        }
    }
}

fn phase_3c(cx: &mut Ctx, parent: usize, st: &St) -> Option<Bags> {
    if let Some(b) = st.alpha(1) {
        return Some(b);
    }
    let swapped = st.inst.swap();
    for (t, t2) in private_pairs(&swapped) {
        let id = cx.child(parent, || format!("VII:t={t},t'={t2}"));
        let p = Priv { inst: st.inst.absorb(Side::V, &VertexSet::from([t, t2])), wu: st.wu, wv: t };
        if let Some(b) = alpha_bags(&p.inst, 1) {
            return Some(b);
        }
        match private_search(cx, id, p) {
            Ok(Some(b)) => return Some(b),
            Ok(None) | Err(None) => {}
            Err(Some(b)) => return Some(b),
        }
    }
    None
}

/// Every vertex of `T` must see `w_u` and `w_v`; vertices seeing only one
/// are placed on that side.
fn both_step(p: &Priv) -> Pass {
    let (wu, wv) = (p.wu(), p.wv());
    let mut fu = VertexSet::new();
    let mut fv = VertexSet::new();
    for z in p.inst.t() {
        let n = p.inst.g.neighbors(z);
        match (n.contains(&wu), n.contains(&wv)) {
            (false, false) => return Pass::Discard,
            (true, false) => {
                fu.insert(z);
            }
            (false, true) => {
                fv.insert(z);
            }
            _ => {}
        }
    }
    p.force(&fu, &fv, false)
}

/// Components of `G[T]` with an edge, each split into its two sides, or
/// `None` when some component is not complete bipartite.
fn complete_bipartite_parts(p: &Priv) -> Option<Vec<(VertexSet, VertexSet)>> {
    let mut out = Vec::new();
    for c in p.inst.g.components_within(&p.inst.t()) {
        if c.len() < 2 {
            continue;
        }
        let (y, z) = p.inst.g.induced_subgraph(&c).bipartition()?;
        if y.iter().any(|a| z.iter().any(|b| !p.inst.g.has_edge(*a, *b))) {
            return None;
        }
        out.push((y, z));
    }
    Some(out)
}

fn private_search(cx: &mut Ctx, parent: usize, p: Priv) -> std::result::Result<Option<Bags>, Option<Bags>> {
    let p = run(p, both_step)?;
    let Some(parts) = complete_bipartite_parts(&p) else { return Ok(None) };
    if parts.len() >= 4 {
        return Ok(None);
    }
    for mask in 0..1u32 << parts.len() {
        let mut xu = VertexSet::new();
        let mut xv = VertexSet::new();
        for (i, (y, z)) in parts.iter().enumerate() {
            let (a, b) = if mask >> i & 1 == 0 { (y, z) } else { (z, y) };
            xu.extend(a);
            xv.extend(b);
        }
        let id = cx.child(parent, || format!("VIII:mask={mask:0w$b}", w = parts.len().max(1)));
        let c = p.absorb(Side::U, &xu).absorb(Side::V, &xv);
        if let Some(b) = alpha_bags(&c.inst, 1) {
            return Err(Some(b));
        }
        let _ = id;
        match run(c, endgame_step) {
            Ok(c) => {
                if let Some(b) = alpha_bags(&c.inst, 2).or_else(|| matching_endgame(&c)) {
                    return Ok(Some(b));
                }
            }
            Err(Some(b)) => return Ok(Some(b)),
            Err(None) => {}
        }
    }
    Ok(None)
}

/// One pass of the forcing rules on an independent `T`.
fn endgame_step(p: &Priv) -> Pass {
    let t = p.inst.t();
    // every vertex of N(side) \ {w_side} needs two neighbours in T, else
    // its only neighbour is a covering vertex
    let mut fu = VertexSet::new();
    let mut fv = VertexSet::new();
    for (side, f) in [(Side::U, &mut fu), (Side::V, &mut fv)] {
        for w in p.q(side) {
            let nt: Vec<VertexId> = p.inst.g.neighbors(w).intersection(&t).copied().collect();
            match nt.len() {
                0 => return Pass::Discard,
                1 => {
                    f.insert(nt[0]);
                }
                _ => {}
            }
        }
    }
    if !fu.is_disjoint(&fv) {
        return Pass::Discard;
    }
    if !(fu.is_empty() && fv.is_empty()) {
        return p.force(&fu, &fv, true);
    }
    // a vertex complete to one neighbourhood either gives a 1-constant
    // solution or belongs to the other side
    for z in &t {
        for side in [Side::U, Side::V] {
            if !p.n(side).is_subset(p.inst.g.neighbors(*z)) {
                continue;
            }
            let rest: VertexSet = t.iter().copied().filter(|x| x != z).collect();
            let single = VertexSet::from([*z]);
            let (s_u, s_v) = if side == Side::U { (single, rest) } else { (rest, single) };
            if let Some(b) = p.inst.checked_p4(&s_u, &s_v) {
                return Pass::Found(b);
            }
            let other = if side == Side::U { Side::V } else { Side::U };
            let (fu, fv) = if other == Side::U { (VertexSet::from([*z]), VertexSet::new()) } else { (VertexSet::new(), VertexSet::from([*z])) };
            return p.force(&fu, &fv, false);
        }
    }
    // two vertices with a common non-w neighbour, a neighbour of only the
    // first and a common non-neighbour: the first is no covering vertex
    for side in [Side::U, Side::V] {
        let n = p.n(side);
        let q = p.q(side);
        for &s in &t {
            let ns = p.inst.g.neighbors(s);
            for &r in &t {
                if r == s {
                    continue;
                }
                let nr = p.inst.g.neighbors(r);
                let common = ns.intersection(nr).any(|x| q.contains(x));
                let only_s = n.iter().any(|x| ns.contains(x) && !nr.contains(x));
                let neither = n.iter().any(|x| !ns.contains(x) && !nr.contains(x));
                if common && only_s && neither {
                    let f = VertexSet::from([s]);
                    let (fu, fv) = if side == Side::U { (VertexSet::new(), f) } else { (f, VertexSet::new()) };
                    return p.force(&fu, &fv, false);
                }
            }
        }
    }
    Pass::Done(p.clone())
}

/// Phase 3d: one representative per class of equal `T`-neighbourhoods, then
/// a matching that gives every representative its own vertex of `T`.
fn matching_endgame(p: &Priv) -> Option<Bags> {
    let t = p.inst.t();
    let mut reps = VertexSet::new();
    for side in [Side::U, Side::V] {
        let mut seen: HashSet<Vec<VertexId>> = HashSet::new();
        for w in p.q(side) {
            let key: Vec<VertexId> = p.inst.g.neighbors(w).intersection(&t).copied().collect();
            if seen.insert(key) {
                reps.insert(w);
            }
        }
    }
    let edges: Vec<(VertexId, VertexId)> =
        reps.iter().flat_map(|&w| p.inst.g.neighbors(w).intersection(&t).map(move |&z| (w, z))).collect();
    let m = maximum_matching(&BipartiteGraph::new(reps.clone(), t.clone(), edges));
    if m.len() != reps.len() {
        return None;
    }
    let nu = p.n(Side::U);
    let s_u: VertexSet = m.pairs.iter().filter(|(w, _)| nu.contains(w)).map(|(_, &z)| z).collect();
    let s_v: VertexSet = t.difference(&s_u).copied().collect();
    p.inst.checked_p4(&s_u, &s_v)
}

/// `P4`-suitability for a `(P2+P4)`-free graph.
pub fn p4_suitability_p2p4(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<Solution>> {
    p4_entry(g, u, v, CLASS)
}

/// `P5`-suitability for a `(P2+P4)`-free graph.
pub fn p5_suitability_p2p4(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<WitnessStructure>> {
    suitability(g, u, v, 5, CLASS)
}

/// `P6`-suitability for a `(P2+P4)`-free graph.
pub fn p6_suitability_p2p4(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<WitnessStructure>> {
    suitability(g, u, v, 6, CLASS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::patterns::cycle;

    #[test]
    fn small_cases() {
        assert_eq!(p4_suitability_p2p4(&path(4), 0, 3).unwrap(), Some(Solution::default()));
        assert!(p4_suitability_p2p4(&cycle(6), 0, 3).unwrap().is_none());
        assert!(p5_suitability_p2p4(&path(5), 0, 4).unwrap().is_some());
        assert!(p6_suitability_p2p4(&path(6), 0, 5).unwrap().is_some());
        assert_eq!(p4_suitability_p2p4(&path(7), 0, 6), Err(Error::NotInClass("P2+P4".into())));
    }

    #[test]
    fn connector_paths_are_induced() {
        // u=0, N(u)={1}; T path 2-3-4-5 with 5 adjacent to 1; v=7 via 6
        let g = Graph::from_edges(8, &[(0, 1), (1, 5), (2, 3), (3, 4), (4, 5), (2, 6), (6, 7), (1, 6)]);
        let inst = Inst::new(g, 0, 7);
        let paths = connector_paths(&inst, Side::U, 2);
        assert_eq!(paths, vec![VertexSet::from([2, 3, 4, 5])]);
    }

    #[test]
    fn private_pairs_filter() {
        // N(u) = {1, 2, 3}; s=4 sees {1, 2}, s'=5 sees {2, 3}: together they cover N(u)
        let edges = [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (5, 2), (5, 3), (4, 8), (5, 8), (8, 6)];
        assert!(private_pairs(&Inst::new(Graph::from_edges(9, &edges), 0, 6)).is_empty());
        // a fourth neighbour of u seen by neither makes the pair eligible
        let mut g = Graph::from_edges(9, &edges);
        g.add_edge(0, 7).unwrap();
        g.add_edge(7, 8).unwrap();
        assert_eq!(private_pairs(&Inst::new(g, 0, 6)), vec![(4, 5)]);
    }

    #[test]
    fn deep_phases_sound_without_shortcuts() {
        use crate::oracle::{oracle_suitable_pair_with, OracleConfig};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let cfg = OracleConfig { bound: 24, mode: crate::par::Mode::Sequential };
        let mut checked = 0;
        while checked < 3000 {
            let (g, v) = super::super::layered_instance(&mut rng);
            if !g.is_connected() || g.distance(0, v).unwrap() < 3 || !CLASS.contains(&g).unwrap() {
                continue;
            }
            checked += 1;
            let oracle = oracle_suitable_pair_with(&g, 0, v, 4, &cfg).unwrap().is_some();
            assert_eq!(p4_suitability_p2p4(&g, 0, v).unwrap().is_some(), oracle, "{:?}", g.edges());
            let deep = super::super::without_shortcuts(|| p4_suitability_p2p4(&g, 0, v).unwrap().is_some());
            assert!(!deep || oracle, "{:?}", g.edges());
        }
    }
}
