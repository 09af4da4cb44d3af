//! Hardness gadgets built from hypergraphs, plus the small exact oracles
//! (hypergraph 2-colouring, Hamiltonian path) used to validate them.
//!
//! Vertex layout of `G_H` for a normalized hypergraph with `m` elements and
//! `n` hyperedges: elements `q_i = i`, hyperedges `S_j = m + j`, copies
//! `S'_j = m + n + j`, then `t1 = m + 2n` and `t2 = m + 2n + 1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::witness::WitnessStructure;

/// Default element bound for exhaustive 2-colouring.
pub const DEFAULT_COLOURING_BOUND: usize = 20;

/// Default vertex bound for the Hamiltonian path search.
pub const DEFAULT_HAMPATH_BOUND: usize = 10;

/// Elements `0..m` and a list of nonempty hyperedges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    pub m: usize,
    pub edges: Vec<BTreeSet<usize>>,
}

/// A bipartition of the elements meeting every hyperedge on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColouring {
    pub q1: BTreeSet<usize>,
    pub q2: BTreeSet<usize>,
}

impl Hypergraph {
    /// # Panics
    /// Panics on an empty hyperedge or an element outside `0..m`.
    pub fn new(m: usize, edges: Vec<BTreeSet<usize>>) -> Self {
        for e in &edges {
            assert!(!e.is_empty(), "hyperedges must be nonempty");
            assert!(e.iter().all(|&x| x < m), "element out of range");
        }
        Hypergraph { m, edges }
    }

    /// Appends `Q` as the last hyperedge unless it already is.
    ///
    /// Every 2-colouring has both sides nonempty, so it meets `Q`; the
    /// appended hyperedge never changes 2-colourability.
    pub fn normalized(&self) -> Hypergraph {
        let q: BTreeSet<usize> = (0..self.m).collect();
        let mut h = self.clone();
        if h.edges.last() != Some(&q) {
            h.edges.push(q);
        }
        h
    }

    pub fn is_normalized(&self) -> bool {
        self.edges.last() == Some(&(0..self.m).collect())
    }
}

/// Lexicographically first 2-colouring: element 0 is in `q1`, and the other
/// members of `q1` are enumerated as a binary counter over elements `1..m`.
pub fn two_colouring(h: &Hypergraph) -> Result<Option<TwoColouring>> {
    let m = h.m;
    if m > DEFAULT_COLOURING_BOUND {
        return Err(Error::TooManyElements { m, bound: DEFAULT_COLOURING_BOUND });
    }
    if m < 2 {
        return Ok(None);
    }
    let masks: Vec<u32> = h.edges.iter().map(|e| e.iter().fold(0, |a, &x| a | 1 << x)).collect();
    let all = (1u32 << m) - 1;
    for rest in 0..(1u32 << (m - 1)) - 1 {
        let q1 = 1 | rest << 1;
        let q2 = all & !q1;
        if masks.iter().all(|&e| e & q1 != 0 && e & q2 != 0) {
            let set = |mask: u32| (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            return Ok(Some(TwoColouring { q1: set(q1), q2: set(q2) }));
        }
    }
    Ok(None)
}

/// Role of a gadget vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Element vertex `q_i`.
    Element(usize),
    /// Hyperedge vertex `S_j`.
    Set(usize),
    /// Copy `S'_j`.
    Copy(usize),
    T1,
    T2,
    /// Vertex `i` (1-based from `t_side`) of the pendant path at `t_side`.
    Pendant { side: u8, index: usize },
    /// Internal vertex `index` (1-based from `a`) of the subdivided edge `ab`
    /// of `G_H`, where `a < b`.
    Sub { a: VertexId, b: VertexId, index: usize },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Element(i) => write!(f, "q{i}"),
            Role::Set(j) => write!(f, "S{j}"),
            Role::Copy(j) => write!(f, "S'{j}"),
            Role::T1 => write!(f, "t1"),
            Role::T2 => write!(f, "t2"),
            Role::Pendant { side, index } => write!(f, "pend{side}.{index}"),
            Role::Sub { a, b, index } => write!(f, "sub{a}-{b}.{index}"),
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("unknown role {s:?}");
        let n = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if s == "t1" {
            Ok(Role::T1)
        } else if s == "t2" {
            Ok(Role::T2)
        } else if let Some(r) = s.strip_prefix("S'") {
            Ok(Role::Copy(n(r)?))
        } else if let Some(r) = s.strip_prefix("sub") {
            let (ab, i) = r.split_once('.').ok_or_else(bad)?;
            let (a, b) = ab.split_once('-').ok_or_else(bad)?;
            Ok(Role::Sub { a: n(a)? as VertexId, b: n(b)? as VertexId, index: n(i)? })
        } else if let Some(r) = s.strip_prefix("pend") {
            let (side, i) = r.split_once('.').ok_or_else(bad)?;
            Ok(Role::Pendant { side: n(side)? as u8, index: n(i)? })
        } else if let Some(r) = s.strip_prefix('S') {
            Ok(Role::Set(n(r)?))
        } else if let Some(r) = s.strip_prefix('q') {
            Ok(Role::Element(n(r)?))
        } else {
            Err(bad())
        }
    }
}

/// A generated graph with its vertex roles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub roles: BTreeMap<VertexId, Role>,
}

impl LabeledGraph {
    /// The vertex carrying `role`.
    pub fn vertex(&self, role: Role) -> Option<VertexId> {
        self.roles.iter().find(|(_, &r)| r == role).map(|(&v, _)| v)
    }

    /// Roles as sorted `(vertex, role)` pairs.
    pub fn role_list(&self) -> Vec<(VertexId, Role)> {
        self.roles.iter().map(|(&v, &r)| (v, r)).collect()
    }
}

struct Layout {
    m: usize,
    n: usize,
}

impl Layout {
    fn q(&self, i: usize) -> VertexId {
        i as VertexId
    }
    fn s(&self, j: usize) -> VertexId {
        (self.m + j) as VertexId
    }
    fn s_copy(&self, j: usize) -> VertexId {
        (self.m + self.n + j) as VertexId
    }
    fn t1(&self) -> VertexId {
        (self.m + 2 * self.n) as VertexId
    }
    fn t2(&self) -> VertexId {
        (self.m + 2 * self.n + 1) as VertexId
    }
}

/// The gadget `G_H`; the hypergraph is normalized first.
pub fn build_gh(h: &Hypergraph) -> LabeledGraph {
    let h = h.normalized();
    let (m, n) = (h.m, h.edges.len());
    let l = Layout { m, n };
    let mut g = Graph::with_vertices(m + 2 * n + 2);
    let mut roles = BTreeMap::new();
    for i in 0..m {
        roles.insert(l.q(i), Role::Element(i));
    }
    for j in 0..n {
        roles.insert(l.s(j), Role::Set(j));
        roles.insert(l.s_copy(j), Role::Copy(j));
    }
    roles.insert(l.t1(), Role::T1);
    roles.insert(l.t2(), Role::T2);
    for (j, e) in h.edges.iter().enumerate() {
        for &i in e {
            g.add_edge(l.q(i), l.s(j)).unwrap();
            g.add_edge(l.q(i), l.s_copy(j)).unwrap();
        }
        for jj in 0..n {
            g.add_edge(l.s(j), l.s_copy(jj)).unwrap();
        }
        g.add_edge(l.t1(), l.s(j)).unwrap();
        g.add_edge(l.t2(), l.s_copy(j)).unwrap();
    }
    for a in 0..m {
        for b in a + 1..m {
            g.add_edge(l.q(a), l.q(b)).unwrap();
        }
    }
    LabeledGraph { graph: g, roles }
}

/// `G_H` plus the edge `t1 t2`.
pub fn build_gh_prime(h: &Hypergraph) -> LabeledGraph {
    let mut lg = build_gh(h);
    let t1 = lg.vertex(Role::T1).unwrap();
    let t2 = lg.vertex(Role::T2).unwrap();
    lg.graph.add_edge(t1, t2).unwrap();
    lg
}

/// The subdivided gadget for `P_{2p}`-contractibility, `p` even and `>= 4`.
///
/// `S_n S'_n` stays an edge; other `S S'` edges and `Q S'` edges receive
/// `p-2` internal vertices; `Q Q` and `Q S` edges receive `p-1`; pendant
/// paths of `p-2` edges end at `t̄1` and `t̄2`. New vertices are numbered
/// after `t2`, edge by edge in sorted order, then the two pendant paths.
pub fn build_bar_gh(h: &Hypergraph, p: usize) -> Result<LabeledGraph> {
    if p < 4 || p % 2 == 1 {
        return Err(Error::OddP(p));
    }
    let base = build_gh(h);
    let hn = h.normalized();
    let (m, n) = (hn.m, hn.edges.len());
    let l = Layout { m, n };
    let mut g = Graph::new();
    let mut roles = base.roles.clone();
    for v in base.graph.vertices() {
        g.add_vertex(v);
    }
    let mut next = base.graph.max_id().unwrap() + 1;
    for (a, b) in base.graph.edges() {
        let (ra, rb) = (base.roles[&a], base.roles[&b]);
        let internal = match (ra, rb) {
            (Role::Set(i), Role::Copy(j)) if i == n - 1 && j == n - 1 => 0,
            (Role::Set(_), Role::Copy(_)) | (Role::Element(_), Role::Copy(_)) => p - 2,
            (Role::Element(_), Role::Element(_)) | (Role::Element(_), Role::Set(_)) => p - 1,
            _ => 0,
        };
        let mut prev = a;
        for index in 1..=internal {
            g.add_vertex(next);
            g.add_edge(prev, next).unwrap();
            roles.insert(next, Role::Sub { a, b, index });
            prev = next;
            next += 1;
        }
        g.add_edge(prev, b).unwrap();
    }
    for (side, t) in [(1u8, l.t1()), (2u8, l.t2())] {
        let mut prev = t;
        for index in 1..=p - 2 {
            g.add_vertex(next);
            g.add_edge(prev, next).unwrap();
            roles.insert(next, Role::Pendant { side, index });
            prev = next;
            next += 1;
        }
    }
    Ok(LabeledGraph { graph: g, roles })
}

/// Internal vertices of the subdivided edge `ab` of `G_H`, ordered from `a`.
fn sub_path(lg: &LabeledGraph, a: VertexId, b: VertexId) -> Vec<VertexId> {
    let (x, y) = (a.min(b), a.max(b));
    let mut items: Vec<(usize, VertexId)> = lg
        .roles
        .iter()
        .filter_map(|(&v, r)| match *r {
            Role::Sub { a, b, index } if a == x && b == y => Some((index, v)),
            _ => None,
        })
        .collect();
    items.sort_unstable();
    let mut out: Vec<VertexId> = items.into_iter().map(|(_, v)| v).collect();
    if a > b {
        out.reverse();
    }
    out
}

/// Splits the path from `a` to `b`: internal vertices up to the middle-most
/// one (ties toward `a`) join `a`'s side, the rest join `b`'s side.
fn split(lg: &LabeledGraph, a: VertexId, b: VertexId, a_side: &mut VertexSet, b_side: &mut VertexSet) {
    let inner = sub_path(lg, a, b);
    let mid = inner.len().div_ceil(2);
    a_side.extend(&inner[..mid]);
    b_side.extend(&inner[mid..]);
}

/// The `P_{2p}` witness of `bar G_H` built from a 2-colouring, bags in path
/// order from `t̄1` to `t̄2`.
///
/// Subdivided edges are split between `W(S_n)` and `W(S'_n)` at their
/// middle-most internal vertex, ties toward the `W(S_n)` end. Paths between
/// two vertices of the same bag go entirely to that bag.
pub fn bar_gh_witness(h: &Hypergraph, p: usize, c: &TwoColouring) -> Result<WitnessStructure> {
    let lg = build_bar_gh(h, p)?;
    let hn = h.normalized();
    let (m, n) = (hn.m, hn.edges.len());
    let l = Layout { m, n };
    let mut left = VertexSet::new();
    let mut right = VertexSet::new();
    for j in 0..n {
        left.insert(l.s(j));
        right.insert(l.s_copy(j));
    }
    for &q in &c.q1 {
        left.insert(l.q(q));
    }
    for &q in &c.q2 {
        right.insert(l.q(q));
    }
    let base = build_gh(h);
    for (a, b) in base.graph.edges() {
        if [a, b].contains(&l.t1()) || [a, b].contains(&l.t2()) {
            continue;
        }
        match (left.contains(&a), left.contains(&b)) {
            (true, true) => left.extend(sub_path(&lg, a, b)),
            (false, false) => right.extend(sub_path(&lg, a, b)),
            (true, false) => split(&lg, a, b, &mut left, &mut right),
            (false, true) => split(&lg, b, a, &mut left, &mut right),
        }
    }
    let mut bags = Vec::new();
    for index in (1..=p - 2).rev() {
        bags.push(VertexSet::from([lg.vertex(Role::Pendant { side: 1, index }).unwrap()]));
    }
    bags.push(VertexSet::from([l.t1()]));
    bags.push(left);
    bags.push(right);
    bags.push(VertexSet::from([l.t2()]));
    for index in 1..=p - 2 {
        bags.push(VertexSet::from([lg.vertex(Role::Pendant { side: 2, index }).unwrap()]));
    }
    Ok(WitnessStructure::new(bags))
}

/// One subdivision of every edge: `g` has a Hamiltonian path iff the result
/// has an induced path with `2n - 2` edges.
pub fn hampath_to_lip_subdivision(g: &Graph) -> Graph {
    g.subdivide_all_edges(1)
}

/// The line graph: `g` has a Hamiltonian path iff the result has an induced
/// path on `n - 1` vertices.
pub fn hampath_to_lip_linegraph(g: &Graph) -> Graph {
    g.line_graph()
}

/// Lexicographically first Hamiltonian path, by exhaustive search.
pub fn hampath_bruteforce(g: &Graph) -> Result<Option<Vec<VertexId>>> {
    let n = g.vertex_count();
    if n > DEFAULT_HAMPATH_BOUND {
        return Err(Error::TooLarge { n, bound: DEFAULT_HAMPATH_BOUND });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    let adj: Vec<u32> = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0, |a, y| a | 1 << ids.binary_search(y).unwrap()))
        .collect();
    fn go(adj: &[u32], cur: &mut Vec<usize>, used: u32, n: usize) -> bool {
        if cur.len() == n {
            return true;
        }
        let mut c = adj[*cur.last().unwrap()] & !used;
        while c != 0 {
            let y = c.trailing_zeros() as usize;
            c &= c - 1;
            cur.push(y);
            if go(adj, cur, used | 1 << y, n) {
                return true;
            }
            cur.pop();
        }
        false
    }
    for s in 0..n {
        let mut cur = vec![s];
        if go(&adj, &mut cur, 1 << s, n) {
            return Ok(Some(cur.iter().map(|&i| ids[i]).collect()));
        }
    }
    Ok(None)
}
