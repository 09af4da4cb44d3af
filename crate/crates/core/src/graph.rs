//! Undirected simple graphs with stable vertex ids and contraction provenance.
//!
//! A [`Graph`] is a value: every operation returns a new graph. Each vertex
//! carries an origin set recording which vertices of the graph it was derived
//! from, so any structure found on a contracted graph can be lifted back.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Stable vertex identifier.
pub type VertexId = u32;

/// Ordered vertex set.
pub type VertexSet = BTreeSet<VertexId>;

/// A small graph used as a forbidden or target pattern.
pub type PatternGraph = Graph;

/// Default bound on pattern size for induced-subgraph search.
pub const DEFAULT_PATTERN_BOUND: usize = 10;

const EMPTY: &VertexSet = &BTreeSet::new();

/// Undirected simple graph with per-vertex contraction provenance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<VertexId, VertexSet>,
    origin: BTreeMap<VertexId, VertexSet>,
}

impl Graph {
    /// The graph with no vertices.
    pub fn new() -> Self {
        Graph::default()
    }

    /// The edgeless graph on `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Graph::new();
        for v in 0..n as VertexId {
            g.add_vertex(v);
        }
        g
    }

    /// The graph on `0..n` with the given edges.
    ///
    /// # Panics
    /// Panics on a self-loop or an endpoint outside `0..n`.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v).expect("invalid edge");
        }
        g
    }

    /// Inserts an isolated vertex with identity provenance; no-op if present.
    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
        self.origin.entry(v).or_insert_with(|| BTreeSet::from([v]));
    }

    /// Inserts the edge `uv`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::NotAnEdge(u, v));
        }
        for x in [u, v] {
            if !self.adj.contains_key(&x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Neighbourhood of `v`; empty for unknown vertices.
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        self.adj.get(&v).unwrap_or(EMPTY)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (&u, ns) in &self.adj {
            for &v in ns.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// Largest vertex id, if any.
    pub fn max_id(&self) -> Option<VertexId> {
        self.adj.keys().next_back().copied()
    }

    /// Union of the neighbourhoods of `s`, minus `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for &x in s {
            out.extend(self.neighbors(x).iter().filter(|y| !s.contains(y)));
        }
        out
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: VertexId) -> VertexSet {
        let mut s = self.neighbors(v).clone();
        s.insert(v);
        s
    }

    // ---- provenance -------------------------------------------------------

    /// Original vertices merged into `v`.
    pub fn origin(&self, v: VertexId) -> &VertexSet {
        self.origin.get(&v).unwrap_or(EMPTY)
    }

    /// Full provenance map.
    pub fn origins(&self) -> &BTreeMap<VertexId, VertexSet> {
        &self.origin
    }

    /// The current vertex whose origin contains the original vertex `x`.
    pub fn representative(&self, x: VertexId) -> Option<VertexId> {
        if self.origin.get(&x).is_some_and(|o| o.contains(&x)) {
            return Some(x);
        }
        self.origin.iter().find(|(_, o)| o.contains(&x)).map(|(&v, _)| v)
    }

    /// Union of the origins of `s`.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for &x in s {
            out.extend(self.origin(x));
        }
        out
    }

    /// Resets provenance to the identity map.
    pub fn forget_origins(&self) -> Graph {
        let mut g = self.clone();
        for (&v, o) in g.origin.iter_mut() {
            *o = BTreeSet::from([v]);
        }
        g
    }

    // ---- contraction ------------------------------------------------------

    /// Contracts the edge `uv` onto `u`.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.merge_into(u, &BTreeSet::from([v]));
        Ok(g)
    }

    /// Contracts every connected component of `g[s]` onto its smallest id.
    pub fn contract_set(&self, s: &VertexSet) -> Result<Graph> {
        if let Some(&x) = s.iter().find(|x| !self.contains(**x)) {
            return Err(Error::UnknownVertex(x));
        }
        let mut g = self.clone();
        for comp in self.components_within(s) {
            if comp.len() > 1 {
                let keep = *comp.iter().next().unwrap();
                let rest: VertexSet = comp.iter().copied().filter(|&x| x != keep).collect();
                g.merge_into(keep, &rest);
            }
        }
        Ok(g)
    }

    /// Contracts a connected set onto its smallest id and returns that id.
    pub(crate) fn contract_connected(&self, s: &VertexSet) -> (Graph, VertexId) {
        debug_assert!(self.is_connected_set(s));
        let keep = *s.iter().next().expect("nonempty set");
        let rest: VertexSet = s.iter().copied().filter(|&x| x != keep).collect();
        let mut g = self.clone();
        g.merge_into(keep, &rest);
        (g, keep)
    }

    fn merge_into(&mut self, keep: VertexId, rest: &VertexSet) {
        let mut nbrs = self.adj.remove(&keep).unwrap_or_default();
        let mut org = self.origin.remove(&keep).unwrap_or_default();
        for &x in rest {
            if let Some(nx) = self.adj.remove(&x) {
                nbrs.extend(nx);
            }
            if let Some(ox) = self.origin.remove(&x) {
                org.extend(ox);
            }
        }
        nbrs.remove(&keep);
        for x in rest {
            nbrs.remove(x);
        }
        for &y in &nbrs {
            let ny = self.adj.get_mut(&y).unwrap();
            for x in rest {
                ny.remove(x);
            }
            ny.insert(keep);
        }
        self.adj.insert(keep, nbrs);
        self.origin.insert(keep, org);
    }

    /// Deletes the vertices of `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Graph {
        let mut g = Graph::new();
        for (&v, ns) in &self.adj {
            if !s.contains(&v) {
                g.adj.insert(v, ns.iter().copied().filter(|y| !s.contains(y)).collect());
                g.origin.insert(v, self.origin(v).clone());
            }
        }
        g
    }

    /// The subgraph induced by `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let mut g = Graph::new();
        for (&v, ns) in &self.adj {
            if s.contains(&v) {
                g.adj.insert(v, ns.intersection(s).copied().collect());
                g.origin.insert(v, self.origin(v).clone());
            }
        }
        g
    }

    // ---- distances and connectivity ---------------------------------------

    /// BFS distances from `src` to every reachable vertex.
    pub fn bfs_distances(&self, src: VertexId) -> BTreeMap<VertexId, usize> {
        let mut dist = BTreeMap::new();
        if !self.contains(src) {
            return dist;
        }
        dist.insert(src, 0);
        let mut q = VecDeque::from([src]);
        while let Some(x) = q.pop_front() {
            let d = dist[&x];
            for &y in self.neighbors(x) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(y) {
                    e.insert(d + 1);
                    q.push_back(y);
                }
            }
        }
        dist
    }

    /// BFS distance, `None` when disconnected.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.bfs_distances(u).get(&v).copied()
    }

    /// Lexicographically smallest shortest path from `u` to `v`.
    pub fn shortest_path(&self, u: VertexId, v: VertexId) -> Option<Vec<VertexId>> {
        let dist = self.bfs_distances(v);
        let mut d = *dist.get(&u)?;
        let mut path = vec![u];
        let mut x = u;
        while d > 0 {
            x = *self
                .neighbors(x)
                .iter()
                .find(|y| dist.get(y) == Some(&(d - 1)))
                .expect("BFS layer predecessor");
            path.push(x);
            d -= 1;
        }
        Some(path)
    }

    /// Components of `g[s]`, each sorted, ordered by smallest member.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for &start in s {
            if seen.contains(&start) || !self.contains(start) {
                continue;
            }
            let mut comp = VertexSet::from([start]);
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if s.contains(&y) && seen.insert(y) {
                        comp.insert(y);
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Connected components ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// True for the empty graph and for connected graphs.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True when `g[s]` is connected and `s` is nonempty.
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        !s.is_empty() && self.components_within(s).len() == 1
    }

    /// True when no two vertices of `s` are adjacent.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|&x| self.neighbors(x).is_disjoint(s))
    }

    // ---- derived graphs ----------------------------------------------------

    /// Complement on the same vertex set (identity provenance kept).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new();
        for v in self.vertices() {
            g.add_vertex(v);
            g.origin.insert(v, self.origin(v).clone());
        }
        let vs: Vec<_> = self.vertices().collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        g
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in self.vertices() {
            let mut dist: BTreeMap<VertexId, usize> = BTreeMap::from([(s, 0)]);
            let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in self.neighbors(x) {
                    match dist.get(&y) {
                        None => {
                            dist.insert(y, dist[&x] + 1);
                            parent.insert(y, x);
                            q.push_back(y);
                        }
                        Some(&dy) if parent.get(&x) != Some(&y) => {
                            let len = dist[&x] + dy + 1;
                            best = Some(best.map_or(len, |b| b.min(len)));
                        }
                        _ => {}
                    }
                }
            }
        }
        best
    }

    /// Replaces every edge by a path with `t` internal vertices.
    ///
    /// New vertices get ids above the current maximum, allocated edge by edge
    /// in sorted edge order and along each edge from the smaller endpoint.
    pub fn subdivide_all_edges(&self, t: usize) -> Graph {
        let mut g = Graph::new();
        for v in self.vertices() {
            g.add_vertex(v);
        }
        let mut next = self.max_id().map_or(0, |m| m + 1);
        for (a, b) in self.edges() {
            let mut prev = a;
            for _ in 0..t {
                g.add_vertex(next);
                g.add_edge(prev, next).unwrap();
                prev = next;
                next += 1;
            }
            g.add_edge(prev, b).unwrap();
        }
        g
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let es = self.edges();
        let mut g = Graph::with_vertices(es.len());
        for i in 0..es.len() {
            for j in i + 1..es.len() {
                let (a, b) = es[i];
                let (c, d) = es[j];
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i as VertexId, j as VertexId).unwrap();
                }
            }
        }
        g
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// Forest of maximum degree at most two.
    pub fn is_linear_forest(&self) -> bool {
        self.is_forest() && self.max_degree() <= 2
    }

    /// A proper 2-colouring, the side containing each component's smallest
    /// vertex first; `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut colour: BTreeMap<VertexId, bool> = BTreeMap::new();
        for s in self.vertices() {
            if colour.contains_key(&s) {
                continue;
            }
            colour.insert(s, false);
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                let cx = colour[&x];
                for &y in self.neighbors(x) {
                    match colour.get(&y) {
                        None => {
                            colour.insert(y, !cx);
                            q.push_back(y);
                        }
                        Some(&cy) if cy == cx => return None,
                        _ => {}
                    }
                }
            }
        }
        let a = colour.iter().filter(|(_, &c)| !c).map(|(&v, _)| v).collect();
        let b = colour.iter().filter(|(_, &c)| c).map(|(&v, _)| v).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Graph with vertices renamed `0..n` in ascending id order.
    pub fn normalized(&self) -> Graph {
        let index: BTreeMap<VertexId, VertexId> =
            self.vertices().enumerate().map(|(i, v)| (v, i as VertexId)).collect();
        let edges: Vec<_> = self.edges().iter().map(|(a, b)| (index[a], index[b])).collect();
        Graph::from_edges(self.vertex_count(), &edges)
    }

    // ---- induced subgraphs -------------------------------------------------

    /// Lexicographically first induced embedding of `h`, using the default
    /// pattern bound.
    ///
    /// Entry `i` of the result is the image of the `i`-th vertex of `h` in
    /// ascending id order.
    pub fn contains_induced(&self, h: &PatternGraph) -> Result<Option<Vec<VertexId>>> {
        self.contains_induced_bounded(h, DEFAULT_PATTERN_BOUND)
    }

    /// As [`Graph::contains_induced`] with an explicit pattern bound.
    pub fn contains_induced_bounded(
        &self,
        h: &PatternGraph,
        bound: usize,
    ) -> Result<Option<Vec<VertexId>>> {
        let k = h.vertex_count();
        if k > bound {
            return Err(Error::PatternTooLarge { size: k, bound });
        }
        let n = self.vertex_count();
        if k > n {
            return Ok(None);
        }
        if k == 0 {
            return Ok(Some(Vec::new()));
        }
        let ids: Vec<VertexId> = self.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj: Vec<Bits> = ids
            .iter()
            .map(|&v| {
                let mut b = Bits::new(n);
                for y in self.neighbors(v) {
                    b.insert(index[y]);
                }
                b
            })
            .collect();
        let hv: Vec<VertexId> = h.vertices().collect();
        let hdeg: Vec<usize> = hv.iter().map(|&x| h.degree(x)).collect();
        let hadj: Vec<Vec<bool>> =
            hv.iter().map(|&a| hv.iter().map(|&b| h.has_edge(a, b)).collect()).collect();
        let base: Vec<Bits> = (0..k)
            .map(|i| {
                let mut b = Bits::new(n);
                for (x, &v) in ids.iter().enumerate() {
                    let d = self.degree(v);
                    if d >= hdeg[i] && n - 1 - d >= k - 1 - hdeg[i] {
                        b.insert(x);
                    }
                }
                b
            })
            .collect();
        let mut phi = vec![0usize; k];
        let found = embed_rec(0, &mut phi, &adj, &hadj, &base);
        Ok(found.then(|| phi.iter().map(|&x| ids[x]).collect()))
    }

    /// True iff no pattern of `hs` occurs as an induced subgraph.
    pub fn is_h_free(&self, hs: &[PatternGraph]) -> Result<bool> {
        for h in hs {
            if self.contains_induced(h)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Spanning complete bipartite subgraph of a connected P4-free graph.
    ///
    /// `A` is the complement component containing the smallest vertex.
    pub fn spanning_complete_bipartite(&self) -> Result<(VertexSet, VertexSet)> {
        if self.vertex_count() < 2 || !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.contains_induced(&crate::patterns::path(4))?.is_some() {
            return Err(Error::NotP4Free);
        }
        let comps = self.complement().components();
        let a = comps[0].clone();
        let b: VertexSet = self.vertices().filter(|x| !a.contains(x)).collect();
        Ok((a, b))
    }
}

fn embed_rec(i: usize, phi: &mut [usize], adj: &[Bits], hadj: &[Vec<bool>], base: &[Bits]) -> bool {
    let k = phi.len();
    if i == k {
        return true;
    }
    let mut cand = base[i].clone();
    for j in 0..i {
        cand.remove(phi[j]);
        if hadj[i][j] {
            cand.and_with(&adj[phi[j]]);
        } else {
            cand.and_not_with(&adj[phi[j]]);
        }
    }
    for x in cand.iter() {
        phi[i] = x;
        if embed_rec(i + 1, phi, adj, hadj, base) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{complete, cycle, path, parse_pattern, star};

    fn set(xs: &[VertexId]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn contract_edge_on_cycle_gives_triangle() {
        let c4 = cycle(4);
        let g = c4.contract_edge(0, 1).unwrap();
        assert_eq!(g.vertex_set(), set(&[0, 2, 3]));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.origin(0), &set(&[0, 1]));
    }

    #[test]
    fn contract_edge_on_path_records_origin() {
        let g = path(4).contract_edge(1, 2).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 3)]);
        assert_eq!(g.origin(1), &set(&[1, 2]));
    }

    #[test]
    fn contract_edge_collapses_parallel_edges() {
        let g = complete(4).contract_edge(2, 3).unwrap();
        assert_eq!(g, {
            let mut k3 = complete(3);
            k3.origin.insert(2, set(&[2, 3]));
            k3
        });
    }

    #[test]
    fn contract_non_edge_fails() {
        assert_eq!(path(4).contract_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn contract_set_examples() {
        let g = path(5).contract_set(&set(&[1, 2, 3])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 4)]);
        assert_eq!(g.origin(1), &set(&[1, 2, 3]));
        let p = path(5);
        assert_eq!(p.contract_set(&set(&[0, 2, 4])).unwrap(), p);
        let c6 = cycle(6).contract_set(&set(&[0, 1, 3, 4])).unwrap();
        assert_eq!(c6.vertex_count(), 4);
        assert!(c6.vertices().all(|v| c6.degree(v) == 2) && c6.is_connected());
        assert_eq!(path(3).contract_set(&set(&[7])), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn contains_induced_examples() {
        assert!(cycle(5).contains_induced(&path(4)).unwrap().is_some());
        let p2p4 = parse_pattern("P2+P4").unwrap();
        assert!(cycle(6).contains_induced(&p2p4).unwrap().is_none());
        assert_eq!(star(3).contains_induced(&star(3)).unwrap(), Some(vec![0, 1, 2, 3]));
        assert!(matches!(
            path(12).contains_induced(&path(11)),
            Err(Error::PatternTooLarge { size: 11, bound: 10 })
        ));
    }

    #[test]
    fn h_freeness_examples() {
        assert!(!cycle(6).is_h_free(&[cycle(6)]).unwrap());
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let hs: Vec<_> = ["2P2", "C4", "C5"].iter().map(|s| parse_pattern(s).unwrap()).collect();
        assert!(paw.is_h_free(&hs).unwrap());
    }

    #[test]
    fn distances_and_paths() {
        let p = path(4);
        assert_eq!(p.distance(0, 3), Some(3));
        assert_eq!(Graph::with_vertices(2).distance(0, 1), None);
        let c6 = cycle(6);
        assert_eq!(c6.shortest_path(0, 3), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn spanning_complete_bipartite_examples() {
        assert_eq!(cycle(4).spanning_complete_bipartite().unwrap(), (set(&[0, 2]), set(&[1, 3])));
        assert_eq!(path(2).spanning_complete_bipartite().unwrap(), (set(&[0]), set(&[1])));
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert_eq!(paw.spanning_complete_bipartite().unwrap(), (set(&[0]), set(&[1, 2, 3])));
        assert_eq!(path(4).spanning_complete_bipartite(), Err(Error::NotP4Free));
        assert_eq!(Graph::with_vertices(2).spanning_complete_bipartite(), Err(Error::NotConnected));
    }

    #[test]
    fn structural_recognizers() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(star(3).girth(), None);
        assert_eq!(cycle(5).subdivide_all_edges(1).girth(), Some(10));
        assert_eq!(star(3).line_graph().edge_count(), 3);
        assert_eq!(path(4).line_graph().edges(), path(3).edges());
        assert!(parse_pattern("P3+P2+P1").unwrap().is_linear_forest());
        assert!(!star(3).is_linear_forest());
        assert!(!cycle(4).is_linear_forest());
        assert!(cycle(6).is_bipartite() && !cycle(5).is_bipartite());
    }
}
