//! P_k-suitability on H-free graph classes.
//!
//! An instance `(G, u, v, k)` asks for a `P_k` witness structure whose end
//! bags are the singletons `{u}` and `{v}`. The class solvers contract
//! vertices into the bags they are forced into, branch over bounded
//! guesses, and finish with constant-size searches or a bipartite matching.
//! Every contracted graph keeps provenance to the input vertex ids, so a
//! witness found deep in a branch lifts back unchanged.

mod p1p2p3;
mod p1p5;
mod p2p4;
mod sp1p4;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, PatternGraph, VertexId, VertexSet};
use crate::patterns::{describe, linear_forest, path, s_p1_p4};
use crate::witness::{verify_witness, WitnessStructure};

pub use p1p2p3::{p4_suitability_p1p2p3, p5_suitability_p1p2p3, p6_suitability_p1p2p3, p7_suitability_p1p2p3};
pub use p1p5::{p4_suitability_p1p5, p5_suitability_p1p5, p6_suitability_p1p5};
pub use p2p4::{p4_suitability_p2p4, p5_suitability_p2p4, p6_suitability_p2p4};
pub use sp1p4::{pk_suitability_sp1p4, sp1p4_alpha};

/// The four H-free classes with polynomial solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    P2P4,
    P1P2P3,
    P1P5,
    /// `(sP1+P4)`-free graphs.
    SP1P4(usize),
}

impl GraphClass {
    /// The forbidden induced subgraph.
    pub fn pattern(&self) -> PatternGraph {
        match *self {
            GraphClass::P2P4 => linear_forest(&[2, 4]),
            GraphClass::P1P2P3 => linear_forest(&[1, 2, 3]),
            GraphClass::P1P5 => linear_forest(&[1, 5]),
            GraphClass::SP1P4(s) => s_p1_p4(s),
        }
    }

    /// Largest `k` for which a member can contract to `P_k`.
    ///
    /// A graph contracting to `P_k` has an induced `P_k` (a shortest path
    /// between the end bags), and the smallest path containing the pattern
    /// is excluded.
    pub fn max_k(&self) -> usize {
        match *self {
            GraphClass::P2P4 => 6,
            GraphClass::P1P2P3 => 7,
            GraphClass::P1P5 => 6,
            GraphClass::SP1P4(s) => 2 * s + 3,
        }
    }

    /// Pattern name such as `P2+P4`.
    pub fn name(&self) -> String {
        describe(&self.pattern())
    }

    /// True when `g` belongs to the class.
    pub fn contains(&self, g: &Graph) -> Result<bool> {
        g.is_h_free(&[self.pattern()])
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::P2P4 => write!(f, "p2p4"),
            GraphClass::P1P2P3 => write!(f, "p1p2p3"),
            GraphClass::P1P5 => write!(f, "p1p5"),
            GraphClass::SP1P4(s) => write!(f, "sp1p4:{s}"),
        }
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    /// Accepts `p2p4`, `p1p2p3`, `p1p5` and `sp1p4:<s>`.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim().to_ascii_lowercase();
        match t.as_str() {
            "p2p4" => Ok(GraphClass::P2P4),
            "p1p2p3" => Ok(GraphClass::P1P2P3),
            "p1p5" => Ok(GraphClass::P1P5),
            _ => t
                .strip_prefix("sp1p4:")
                .and_then(|s| s.parse().ok())
                .map(GraphClass::SP1P4)
                .ok_or(Error::Parse { line: 1, msg: format!("unknown class {text:?}") }),
        }
    }
}

/// A partition of `T(u, v)` with `N(u) ∪ s_u` and `N(v) ∪ s_v` connected.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Solution {
    pub s_u: VertexSet,
    pub s_v: VertexSet,
}

impl Solution {
    /// The four-bag witness `{u}, N(u) ∪ s_u, N(v) ∪ s_v, {v}`.
    pub fn witness(&self, g: &Graph, u: VertexId, v: VertexId) -> WitnessStructure {
        let mut b2 = g.neighbors(u).clone();
        b2.extend(&self.s_u);
        let mut b3 = g.neighbors(v).clone();
        b3.extend(&self.s_v);
        WitnessStructure::new(vec![VertexSet::from([u]), b2, b3, VertexSet::from([v])])
    }

    /// Reads the solution off a four-bag witness.
    pub fn from_witness(g: &Graph, u: VertexId, v: VertexId, w: &WitnessStructure) -> Solution {
        Solution {
            s_u: w.bags[1].difference(g.neighbors(u)).copied().collect(),
            s_v: w.bags[2].difference(g.neighbors(v)).copied().collect(),
        }
    }
}

/// One unit of work: is `(u, v)` a `P_k`-suitable pair of `graph`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuitabilityInstance {
    pub graph: Graph,
    pub u: VertexId,
    pub v: VertexId,
    pub k: usize,
}

/// A generated instance with the label of the step that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub instance: SuitabilityInstance,
    pub label: String,
}

/// Instances whose disjunction is equivalent to the parent instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchQueue {
    pub branches: Vec<Branch>,
}

impl BranchQueue {
    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }
}

/// Options for the public entry points.
#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Verify class membership before solving.
    pub check_class: bool,
    /// Record `BRANCH <id> <parent> <label>` lines.
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { check_class: true, trace: false }
    }
}

/// Result of a suitability call with its optional trace.
#[derive(Clone, Debug, Default)]
pub struct SuitabilityReport {
    pub witness: Option<WitnessStructure>,
    pub trace: Vec<String>,
}

// ---- search context -------------------------------------------------------

type Bags = Vec<VertexSet>;
type MemoKey = (usize, VertexId, VertexId, Vec<VertexId>, Vec<(VertexId, VertexId)>);

/// Branch ids, optional trace, and the set of instances known to fail.
pub(crate) struct Ctx {
    class: GraphClass,
    trace: Option<Vec<String>>,
    next_id: usize,
    failed: HashSet<MemoKey>,
}

impl Ctx {
    pub(crate) fn new(class: GraphClass, trace: bool) -> Self {
        Ctx { class, trace: trace.then(Vec::new), next_id: 1, failed: HashSet::new() }
    }

    /// Registers a child branch and returns its id.
    pub(crate) fn child(&mut self, parent: usize, label: impl FnOnce() -> String) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        if let Some(t) = &mut self.trace {
            t.push(format!("BRANCH {id} {parent} {}", label()));
        }
        id
    }

    pub(crate) fn into_trace(self) -> Vec<String> {
        self.trace.unwrap_or_default()
    }
}

/// Which end of the path a step works on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    U,
    V,
}

/// A working instance: a contracted graph and the two end vertices.
#[derive(Clone, Debug)]
pub(crate) struct Inst {
    pub(crate) g: Graph,
    pub(crate) u: VertexId,
    pub(crate) v: VertexId,
}

impl Inst {
    pub(crate) fn new(g: Graph, u: VertexId, v: VertexId) -> Self {
        Inst { g, u, v }
    }

    pub(crate) fn nu(&self) -> &VertexSet {
        self.g.neighbors(self.u)
    }

    pub(crate) fn nv(&self) -> &VertexSet {
        self.g.neighbors(self.v)
    }

    pub(crate) fn end(&self, side: Side) -> VertexId {
        match side {
            Side::U => self.u,
            Side::V => self.v,
        }
    }

    /// `T(u, v) = V \ (N[u] ∪ N[v])`.
    pub(crate) fn t(&self) -> VertexSet {
        let mut t = self.g.vertex_set();
        t.remove(&self.u);
        t.remove(&self.v);
        for x in self.nu().iter().chain(self.nv()) {
            t.remove(x);
        }
        t
    }

    pub(crate) fn swap(&self) -> Inst {
        Inst { g: self.g.clone(), u: self.v, v: self.u }
    }

    pub(crate) fn dist(&self) -> Option<usize> {
        self.g.distance(self.u, self.v)
    }

    /// Contraction Rule on `N(side) ∪ x`.
    pub(crate) fn absorb(&self, side: Side, x: &VertexSet) -> Inst {
        let mut s = self.g.neighbors(self.end(side)).clone();
        s.extend(x);
        Inst { g: contraction_rule(&self.g, &s), u: self.u, v: self.v }
    }

    /// Contraction Rule on `N(u)`.
    pub(crate) fn normalize_u(&self) -> Inst {
        self.absorb(Side::U, &VertexSet::new())
    }

    /// Contraction Rule on `N(u)` and on `N(v)`.
    pub(crate) fn normalize_ends(&self) -> Inst {
        self.normalize_u().absorb(Side::V, &VertexSet::new())
    }

    /// Current vertex containing the input vertex `orig`.
    pub(crate) fn rep(&self, orig: VertexId) -> VertexId {
        self.g.representative(orig).expect("provenance covers every input vertex")
    }

    /// Lifted four-bag witness for the solution `(s_u, s_v)`.
    pub(crate) fn p4_bags(&self, s_u: &VertexSet, s_v: &VertexSet) -> Bags {
        let mut b2 = self.nu().clone();
        b2.extend(s_u);
        let mut b3 = self.nv().clone();
        b3.extend(s_v);
        vec![
            self.g.lift(&VertexSet::from([self.u])),
            self.g.lift(&b2),
            self.g.lift(&b3),
            self.g.lift(&VertexSet::from([self.v])),
        ]
    }

    /// Checks `(s_u, s_v)` directly and returns the lifted bags when valid.
    pub(crate) fn checked_p4(&self, s_u: &VertexSet, s_v: &VertexSet) -> Option<Bags> {
        let mut b2 = self.nu().clone();
        b2.extend(s_u);
        let mut b3 = self.nv().clone();
        b3.extend(s_v);
        let mut cover = s_u.clone();
        cover.extend(s_v);
        let ok = s_u.is_disjoint(s_v)
            && cover == self.t()
            && self.nu().is_disjoint(self.nv())
            && self.g.is_connected_set(&b2)
            && self.g.is_connected_set(&b3);
        ok.then(|| self.p4_bags(s_u, s_v))
    }

    fn memo_key(&self, k: usize) -> MemoKey {
        (k, self.u, self.v, self.g.vertices().collect(), self.g.edges())
    }
}

// ---- framework operations ---------------------------------------------------

/// Contracts every edge inside `g[s]`.
pub fn contraction_rule(g: &Graph, s: &VertexSet) -> Graph {
    let s: VertexSet = s.iter().copied().filter(|&x| g.contains(x)).collect();
    g.contract_set(&s).expect("vertices filtered to the graph")
}

fn check_pair(g: &Graph, u: VertexId, v: VertexId) -> Result<()> {
    for x in [u, v] {
        if !g.contains(x) {
            return Err(Error::UnknownVertex(x));
        }
    }
    if u == v || g.has_edge(u, v) {
        return Err(Error::AdjacentPair(u, v));
    }
    Ok(())
}

/// `(u, v)` is `P3`-suitable iff `g - {u, v}` is nonempty and connected.
pub fn p3_suitability(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    check_pair(g, u, v)?;
    let rest = g.remove_vertices(&VertexSet::from([u, v]));
    Ok(rest.vertex_count() > 0 && rest.is_connected())
}

/// Subsets of `items` with at most `max` elements, by size then lexicographically.
pub(crate) fn small_subsets(items: &[VertexId], max: usize, mut f: impl FnMut(&VertexSet) -> bool) -> bool {
    fn rec(items: &[VertexId], start: usize, left: usize, cur: &mut Vec<VertexId>, f: &mut dyn FnMut(&VertexSet) -> bool) -> bool {
        if left == 0 {
            return f(&cur.iter().copied().collect());
        }
        for i in start..items.len() {
            cur.push(items[i]);
            if rec(items, i + 1, left - 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    for size in 0..=max.min(items.len()) {
        if rec(items, 0, size, &mut Vec::new(), &mut f) {
            return true;
        }
    }
    false
}

/// One side of the α-constant check, in the current ids.
fn alpha_side(inst: &Inst, alpha: usize) -> Option<(VertexSet, VertexSet)> {
    let t = inst.t();
    let items: Vec<VertexId> = t.iter().copied().collect();
    let nv = inst.nv().clone();
    let anchor = *nv.iter().next()?;
    let mut found = None;
    small_subsets(&items, alpha, |s| {
        let mut core = inst.nu().clone();
        core.extend(s);
        if !inst.g.is_connected_set(&core) {
            return false;
        }
        let mut rest: VertexSet = t.difference(s).copied().collect();
        rest.extend(&nv);
        let d = inst.g.components_within(&rest).into_iter().find(|c| c.contains(&anchor)).unwrap();
        if !nv.is_subset(&d) {
            return false;
        }
        let s_v: VertexSet = t.intersection(&d).copied().collect();
        let s_u: VertexSet = t.difference(&d).copied().collect();
        if inst.checked_p4(&s_u, &s_v).is_some() {
            found = Some((s_u, s_v));
            true
        } else {
            false
        }
    });
    found
}

/// α-constant check in the current ids: the `u` side first, then `v`.
pub(crate) fn alpha_inst(inst: &Inst, alpha: usize) -> Option<(VertexSet, VertexSet)> {
    if !inst.nu().is_disjoint(inst.nv()) || inst.nu().is_empty() || inst.nv().is_empty() {
        return None;
    }
    alpha_side(inst, alpha).or_else(|| alpha_side(&inst.swap(), alpha).map(|(a, b)| (b, a)))
}

/// Lifted bags of an α-constant solution.
pub(crate) fn alpha_bags(inst: &Inst, alpha: usize) -> Option<Bags> {
    alpha_inst(inst, alpha).map(|(a, b)| inst.p4_bags(&a, &b))
}

/// Searches for an α-constant solution.
///
/// For each side and each `S ⊆ T` with `|S| <= alpha` and `N(side) ∪ S`
/// connected, the solution exists when all of the opposite neighbourhood
/// lies in one component `D` of `G[(T \ S) ∪ N(other)]`; then `T \ D` joins
/// this side and `T ∩ D` the other.
pub fn alpha_constant_check(g: &Graph, u: VertexId, v: VertexId, alpha: usize) -> Result<Option<Solution>> {
    check_pair(g, u, v)?;
    let inst = Inst::new(g.clone(), u, v);
    Ok(alpha_inst(&inst, alpha).map(|(s_u, s_v)| Solution { s_u, s_v }))
}

/// Contracted copies of `inst`, one per inner edge of the shortest path.
pub(crate) fn reduce_inner(inst: &Inst, k: usize) -> Result<Vec<(Inst, String)>> {
    let d = inst.dist().ok_or(Error::NotConnected)?;
    if d < k {
        return Err(Error::DistanceNotExceeding { d, k });
    }
    let p = inst.g.shortest_path(inst.u, inst.v).unwrap();
    Ok((1..d - 1)
        .map(|i| {
            let g = inst.g.contract_edge(p[i], p[i + 1]).unwrap();
            (Inst::new(g, inst.u, inst.v), format!("reduce:e={}-{}", p[i], p[i + 1]))
        })
        .collect())
}

/// Distance reduction: one instance per edge of a fixed shortest `u`-`v`
/// path that avoids `u` and `v`, each with that edge contracted.
///
/// Requires `d >= k`: the path has more vertices than the `k` bags, so some
/// bag holds two consecutive path vertices.
pub fn reduce_distance(g: &Graph, u: VertexId, v: VertexId, k: usize) -> Result<BranchQueue> {
    check_pair(g, u, v)?;
    let inst = Inst::new(g.clone(), u, v);
    let branches = reduce_inner(&inst, k)?
        .into_iter()
        .map(|(c, label)| Branch { instance: SuitabilityInstance { graph: c.g, u, v, k }, label })
        .collect();
    Ok(BranchQueue { branches })
}

/// Vertices cut off from `v` by `N[u] ∪ s_prime`.
pub(crate) fn closure_inner(g: &Graph, u: VertexId, v: VertexId, s_prime: &VertexSet) -> VertexSet {
    let mut cut = g.closed_neighbors(u);
    cut.extend(s_prime);
    let rest: VertexSet = g.vertex_set().difference(&cut).copied().collect();
    let mut out = VertexSet::new();
    for c in g.components_within(&rest) {
        if !c.contains(&v) {
            out.extend(c);
        }
    }
    out
}

/// The closure of `s_prime`: vertices whose every path to `v` meets
/// `N(u) ∪ s_prime`, computed as the components of `G - (N[u] ∪ s_prime)`
/// that avoid `v`.
pub fn closure(g: &Graph, u: VertexId, v: VertexId, s_prime: &VertexSet) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    let mut core = g.neighbors(u).clone();
    core.extend(s_prime);
    if !g.is_connected_set(&core) {
        return Err(Error::NotConnectedCore);
    }
    Ok(closure_inner(g, u, v, s_prime))
}

/// Bag `N(side) ∪ s_prime ∪ closure` for the end at `side`, or `None`
/// when `N(side) ∪ s_prime` is disconnected.
pub(crate) fn peel_bag(inst: &Inst, side: Side, s_prime: &VertexSet) -> Option<VertexSet> {
    let i = if side == Side::U { inst.clone() } else { inst.swap() };
    let mut bag = i.nu().clone();
    bag.extend(s_prime);
    if !i.g.is_connected_set(&bag) {
        return None;
    }
    bag.extend(closure_inner(&i.g, i.u, i.v, s_prime));
    Some(bag)
}

/// Contracts `bag` (second bag at `side`) into a new end vertex, deletes
/// the old end, and solves `P_{k-1}` on the result.
pub(crate) fn peel(cx: &mut Ctx, parent: usize, inst: &Inst, side: Side, bag: &VertexSet, k: usize, label: String) -> Option<Bags> {
    let i = if side == Side::U { inst.clone() } else { inst.swap() };
    let (g2, x) = i.g.contract_connected(bag);
    let g3 = g2.remove_vertices(&VertexSet::from([i.u]));
    let child = Inst::new(g3, x, i.v);
    let id = cx.child(parent, || label);
    let rec = solve(cx, id, &child, k - 1)?;
    let mut bags = vec![i.g.lift(&VertexSet::from([i.u]))];
    bags.extend(rec);
    if side == Side::V {
        bags.reverse();
    }
    Some(bags)
}

/// Tries each candidate bag at `side` once, in the given order.
pub(crate) fn peel_all(
    cx: &mut Ctx,
    parent: usize,
    inst: &Inst,
    side: Side,
    k: usize,
    candidates: impl IntoIterator<Item = (VertexSet, String)>,
) -> Option<Bags> {
    let mut seen = HashSet::new();
    for (s_prime, label) in candidates {
        let Some(bag) = peel_bag(inst, side, &s_prime) else { continue };
        if !seen.insert(bag.clone()) {
            continue;
        }
        if let Some(b) = peel(cx, parent, inst, side, &bag, k, label) {
            return Some(b);
        }
    }
    None
}

/// Peels the `u` end over the single-vertex connectors `cands`.
pub(crate) fn peel_connectors(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize, cands: impl IntoIterator<Item = VertexId>) -> Option<Bags> {
    let labelled = cands.into_iter().map(|s| (VertexSet::from([s]), format!("peel:u:s={s}")));
    peel_all(cx, parent, inst, Side::U, k, labelled.collect::<Vec<_>>())
}

/// Peels the `u` end over every `S ⊆ T` with `|S| <= alpha` and
/// `N(u) ∪ S` connected, by size then lexicographically.
pub(crate) fn peel_subsets(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize, alpha: usize) -> Option<Bags> {
    let items: Vec<VertexId> = inst.t().into_iter().collect();
    let mut seen = HashSet::new();
    let mut found = None;
    small_subsets(&items, alpha, |s| {
        let Some(bag) = peel_bag(inst, Side::U, s) else { return false };
        if !seen.insert(bag.clone()) {
            return false;
        }
        found = peel(cx, parent, inst, Side::U, &bag, k, format!("peel:u:S={s:?}"));
        found.is_some()
    });
    found
}

/// Solves `P_k`-suitability for the context's class; bags are lifted.
pub(crate) fn solve(cx: &mut Ctx, parent: usize, inst: &Inst, k: usize) -> Option<Bags> {
    if inst.u == inst.v || inst.g.has_edge(inst.u, inst.v) {
        return None;
    }
    if k == 3 {
        let mut mid = inst.g.vertex_set();
        mid.remove(&inst.u);
        mid.remove(&inst.v);
        return inst.g.is_connected_set(&mid).then(|| {
            vec![inst.g.lift(&VertexSet::from([inst.u])), inst.g.lift(&mid), inst.g.lift(&VertexSet::from([inst.v]))]
        });
    }
    let d = inst.dist()?;
    if d + 1 < k || k > cx.class.max_k() {
        return None;
    }
    let key = inst.memo_key(k);
    if cx.failed.contains(&key) {
        return None;
    }
    let found = match cx.class {
        GraphClass::P2P4 => p2p4::solve(cx, parent, inst, k),
        GraphClass::P1P2P3 => p1p2p3::solve(cx, parent, inst, k),
        GraphClass::P1P5 => p1p5::solve(cx, parent, inst, k),
        GraphClass::SP1P4(s) => sp1p4::solve(cx, parent, inst, k, s),
    };
    if found.is_none() {
        cx.failed.insert(key);
    }
    found
}

/// Checks preconditions shared by every public solver.
pub(crate) fn check_instance(g: &Graph, u: VertexId, v: VertexId, class: GraphClass, check_class: bool) -> Result<()> {
    if check_class && !class.contains(g)? {
        return Err(Error::NotInClass(class.name()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    check_pair(g, u, v)
}

/// `P_k`-suitability of `(u, v)` for a member of `class`, with options.
///
/// # Panics
/// Panics if a solver produces a witness that fails verification.
pub fn suitability_with(g: &Graph, u: VertexId, v: VertexId, k: usize, class: GraphClass, opts: SolveOptions) -> Result<SuitabilityReport> {
    check_instance(g, u, v, class, opts.check_class)?;
    if k < 3 {
        return Err(Error::NotInClass(format!("P{k}-suitability needs k >= 3")));
    }
    let mut cx = Ctx::new(class, opts.trace);
    let inst = Inst::new(g.forget_origins(), u, v);
    let witness = solve(&mut cx, 0, &inst, k).map(WitnessStructure::new);
    if let Some(w) = &witness {
        let report = verify_witness(g, &path(k), w)?;
        assert!(report.is_valid(), "solver produced an invalid witness: {:?}", report.violation);
        assert!(w.bags[0] == VertexSet::from([u]) && w.bags[k - 1] == VertexSet::from([v]));
    }
    Ok(SuitabilityReport { witness, trace: cx.into_trace() })
}

/// `P_k`-suitability of `(u, v)` for a member of `class`.
pub fn suitability(g: &Graph, u: VertexId, v: VertexId, k: usize, class: GraphClass) -> Result<Option<WitnessStructure>> {
    Ok(suitability_with(g, u, v, k, class, SolveOptions::default())?.witness)
}

/// Shared body of the per-class `P4` entry points.
pub(crate) fn p4_entry(g: &Graph, u: VertexId, v: VertexId, class: GraphClass) -> Result<Option<Solution>> {
    let w = suitability(g, u, v, 4, class)?;
    Ok(w.map(|w| Solution::from_witness(g, u, v, &w)))
}

#[cfg(test)]
thread_local! {
    static SHORTCUT_OVERRIDE: std::cell::Cell<Option<usize>> = const { std::cell::Cell::new(None) };
}

/// Constant of a class's shortcut check, lowered inside [`without_shortcuts`].
fn shortcut_alpha(alpha: usize) -> usize {
    #[cfg(test)]
    if let Some(a) = SHORTCUT_OVERRIDE.with(|c| c.get()) {
        return a;
    }
    alpha
}

/// Runs `f` with the shortcut constants lowered to 0.
#[cfg(test)]
pub(crate) fn without_shortcuts<R>(f: impl FnOnce() -> R) -> R {
    SHORTCUT_OVERRIDE.with(|c| c.set(Some(0)));
    let r = f();
    SHORTCUT_OVERRIDE.with(|c| c.set(None));
    r
}

/// Random graph with `u = 0`, then `N(u)`, `N(v)`, `T` and `v` last; edges
/// of random density everywhere except between `N(u)` and `N(v)`.
#[cfg(test)]
pub(crate) fn layered_instance(rng: &mut impl rand::Rng) -> (Graph, VertexId) {
    let a = rng.gen_range(1..=4);
    let b = rng.gen_range(1..=4);
    let n = 2 + a + b + rng.gen_range(3..=9);
    let v = (n - 1) as VertexId;
    let mut g = Graph::with_vertices(n);
    for x in 1..=a as VertexId {
        g.add_edge(0, x).unwrap();
    }
    for x in (a + 1) as VertexId..=(a + b) as VertexId {
        g.add_edge(v, x).unwrap();
    }
    let p: f64 = rng.gen_range(0.2..0.9);
    for x in 1..v {
        for y in x + 1..v {
            let cross = x <= a as VertexId && y > a as VertexId && y <= (a + b) as VertexId;
            if !cross && rng.gen_bool(p) {
                g.add_edge(x, y).unwrap();
            }
        }
    }
    (g, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::cycle;

    fn set(xs: &[VertexId]) -> VertexSet {
        xs.iter().copied().collect()
    }

    /// u=0, a=1, b=2, c=3, d=4, v=5.
    fn h_shape() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
    }

    #[test]
    fn class_names_and_bounds() {
        assert_eq!(GraphClass::P2P4.name(), "P2+P4");
        assert_eq!(GraphClass::SP1P4(2).name(), "2P1+P4");
        assert_eq!("sp1p4:1".parse::<GraphClass>().unwrap(), GraphClass::SP1P4(1));
        assert!("p9".parse::<GraphClass>().is_err());
        assert_eq!(GraphClass::SP1P4(0).max_k(), 3);
        for c in [GraphClass::P2P4, GraphClass::P1P2P3, GraphClass::P1P5, GraphClass::SP1P4(1)] {
            assert_eq!(c.to_string().parse::<GraphClass>().unwrap(), c);
            assert!(!c.contains(&path(c.max_k() + 1)).unwrap());
        }
    }

    #[test]
    fn contraction_rule_examples() {
        let mut g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3), (3, 4)]);
        g = contraction_rule(&g, &set(&[1, 2, 3]));
        assert_eq!(g.neighbors(0), &set(&[1]));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(contraction_rule(&star, &set(&[1, 2, 3])), star);
        let h = h_shape();
        let inst = Inst::new(h.clone(), 0, 5);
        assert_eq!(inst.t().len(), 1);
        assert!(inst.absorb(Side::U, &set(&[3])).t().is_empty());
    }

    #[test]
    fn p3_examples() {
        assert!(p3_suitability(&path(3), 0, 2).unwrap());
        assert!(p3_suitability(&path(5), 0, 4).unwrap());
        assert!(!p3_suitability(&cycle(4), 0, 2).unwrap());
        assert!(!p3_suitability(&cycle(4), 1, 3).unwrap());
        assert_eq!(p3_suitability(&path(3), 0, 1), Err(Error::AdjacentPair(0, 1)));
        // P4 with a pendant on the second vertex: removing the ends of the
        // long path leaves the pendant cut off
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]);
        assert!(!p3_suitability(&g, 3, 4).unwrap() || g.remove_vertices(&set(&[3, 4])).is_connected());
        assert!(!p3_suitability(&g, 0, 2).unwrap());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_constant_check(&path(4), 0, 3, 0).unwrap(), Some(Solution::default()));
        let s = alpha_constant_check(&h_shape(), 0, 5, 1).unwrap().unwrap();
        assert!(s == Solution { s_u: set(&[3]), s_v: set(&[]) } || s == Solution { s_u: set(&[]), s_v: set(&[3]) });
        for a in 0..4 {
            assert!(alpha_constant_check(&cycle(6), 0, 3, a).unwrap().is_none());
        }
    }

    #[test]
    fn reduce_distance_examples() {
        let q = reduce_distance(&path(7), 0, 6, 4).unwrap();
        assert_eq!(q.len(), 4);
        for b in &q.branches {
            assert_eq!(b.instance.graph.distance(0, 6), Some(5));
        }
        assert_eq!(reduce_distance(&path(6), 0, 5, 5).unwrap().len(), 3);
        assert_eq!(reduce_distance(&path(4), 0, 3, 4), Err(Error::DistanceNotExceeding { d: 3, k: 4 }));
    }

    #[test]
    fn closure_examples() {
        assert!(closure(&path(5), 0, 4, &set(&[])).unwrap().is_empty());
        // pendant tree {5, 6} hangs off N(u) = {1}
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6)]);
        assert_eq!(closure(&g, 0, 4, &set(&[])).unwrap(), set(&[5, 6]));
        assert!(closure(&h_shape(), 0, 5, &set(&[3])).unwrap().is_empty());
        assert_eq!(closure(&h_shape(), 0, 5, &set(&[4])), Err(Error::NotConnectedCore));
    }
}
