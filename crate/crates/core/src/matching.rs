//! Maximum bipartite matching by Hopcroft–Karp.
//!
//! Left vertices, right vertices and adjacency lists are processed in
//! ascending id order, so the returned matching is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{VertexId, VertexSet};

/// Bipartite graph with explicit sides.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub left: VertexSet,
    pub right: VertexSet,
    pub edges: BTreeSet<(VertexId, VertexId)>,
}

/// A matching, keyed by left vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: BTreeMap<VertexId, VertexId>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl BipartiteGraph {
    /// Builds a bipartite graph, adding edge endpoints to their sides.
    ///
    /// # Panics
    /// Panics if a vertex would lie on both sides.
    pub fn new(left: VertexSet, right: VertexSet, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut b = BipartiteGraph { left, right, edges: BTreeSet::new() };
        for (l, r) in edges {
            b.left.insert(l);
            b.right.insert(r);
            b.edges.insert((l, r));
        }
        assert!(b.left.is_disjoint(&b.right), "sides must be disjoint");
        b
    }

    fn indexed(&self) -> (Vec<VertexId>, Vec<VertexId>, Vec<Vec<usize>>) {
        let l: Vec<VertexId> = self.left.iter().copied().collect();
        let r: Vec<VertexId> = self.right.iter().copied().collect();
        let mut adj = vec![Vec::new(); l.len()];
        for &(a, b) in &self.edges {
            adj[l.binary_search(&a).unwrap()].push(r.binary_search(&b).unwrap());
        }
        (l, r, adj)
    }
}

const FREE: usize = usize::MAX;

struct Hk<'a> {
    adj: &'a [Vec<usize>],
    ml: Vec<usize>,
    mr: Vec<usize>,
    dist: Vec<usize>,
}

impl Hk<'_> {
    fn bfs(&mut self) -> bool {
        let mut q = VecDeque::new();
        for (l, d) in self.dist.iter_mut().enumerate() {
            if self.ml[l] == FREE {
                *d = 0;
                q.push_back(l);
            } else {
                *d = FREE;
            }
        }
        let mut found = false;
        while let Some(l) = q.pop_front() {
            for &r in &self.adj[l] {
                match self.mr[r] {
                    FREE => found = true,
                    l2 if self.dist[l2] == FREE => {
                        self.dist[l2] = self.dist[l] + 1;
                        q.push_back(l2);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, l: usize) -> bool {
        for i in 0..self.adj[l].len() {
            let r = self.adj[l][i];
            let ok = match self.mr[r] {
                FREE => true,
                l2 => self.dist[l2] == self.dist[l] + 1 && self.dfs(l2),
            };
            if ok {
                self.ml[l] = r;
                self.mr[r] = l;
                return true;
            }
        }
        self.dist[l] = FREE;
        false
    }
}

/// A maximum matching.
pub fn maximum_matching(b: &BipartiteGraph) -> Matching {
    let (l, r, adj) = b.indexed();
    let mut hk = Hk { adj: &adj, ml: vec![FREE; l.len()], mr: vec![FREE; r.len()], dist: vec![FREE; l.len()] };
    while hk.bfs() {
        for x in 0..l.len() {
            if hk.ml[x] == FREE {
                hk.dfs(x);
            }
        }
    }
    let pairs = (0..l.len()).filter(|&x| hk.ml[x] != FREE).map(|x| (l[x], r[hk.ml[x]])).collect();
    Matching { pairs }
}

/// Vertices reachable from free left vertices by alternating paths.
fn alternating_reach(b: &BipartiteGraph, m: &Matching) -> (VertexSet, VertexSet) {
    let mut rev: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for (&x, &y) in &m.pairs {
        rev.insert(y, x);
    }
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(x, y) in &b.edges {
        adj.entry(x).or_default().push(y);
    }
    let mut zl: VertexSet = b.left.iter().copied().filter(|x| !m.pairs.contains_key(x)).collect();
    let mut zr = VertexSet::new();
    let mut q: VecDeque<VertexId> = zl.iter().copied().collect();
    while let Some(x) = q.pop_front() {
        for &y in adj.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
            if m.pairs.get(&x) == Some(&y) || !zr.insert(y) {
                continue;
            }
            if let Some(&x2) = rev.get(&y) {
                if zl.insert(x2) {
                    q.push_back(x2);
                }
            }
        }
    }
    (zl, zr)
}

/// True if some alternating path joins two free vertices.
pub fn has_augmenting_path(b: &BipartiteGraph, m: &Matching) -> bool {
    let matched_right: VertexSet = m.pairs.values().copied().collect();
    let (_, zr) = alternating_reach(b, m);
    zr.iter().any(|y| !matched_right.contains(y))
}

/// König vertex cover derived from a maximum matching: left vertices not
/// alternating-reachable from free left vertices, plus reachable right ones.
pub fn konig_cover(b: &BipartiteGraph, m: &Matching) -> VertexSet {
    let (zl, zr) = alternating_reach(b, m);
    let mut cover: VertexSet = b.left.difference(&zl).copied().collect();
    cover.extend(zr);
    cover
}
