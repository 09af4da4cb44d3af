//! Exhaustive contraction oracles.
//!
//! Vertices are assigned to bags in ascending id order, trying bags in
//! ascending pattern order, so the first witness found is the
//! lexicographically first assignment vector. Partial assignments are pruned
//! by three sound tests: host distances bound pattern distances, enough
//! vertices remain for the empty bags, and every bag can still be connected
//! through unassigned vertices allowed in it. Complete assignments are fully
//! verified.

use crate::error::{Error, Result};
use crate::graph::{Graph, PatternGraph, VertexId, VertexSet};
use crate::par::{self, Mode};
use crate::patterns::{cycle, path};
use crate::witness::WitnessStructure;

/// Default host-size bound for patterns with at least three vertices.
pub const DEFAULT_ORACLE_BOUND: usize = 12;

const HARD_LIMIT: usize = 64;
const INF: u32 = u32::MAX;

/// Oracle settings.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Maximum host size when the pattern has three or more vertices.
    pub bound: usize,
    /// Sequential or parallel split over the first assignments.
    pub mode: Mode,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { bound: DEFAULT_ORACLE_BOUND, mode: Mode::default() }
    }
}

struct Search {
    n: usize,
    k: usize,
    gadj: Vec<u64>,
    gdist: Vec<Vec<u32>>,
    hdist: Vec<Vec<u32>>,
    hadj: Vec<u64>,
    allowed: Vec<u64>,
}

#[derive(Clone)]
struct State {
    bag_of: Vec<u8>,
    bags: Vec<u64>,
}

fn bfs_matrix(n: usize, adj: &[u64]) -> Vec<Vec<u32>> {
    (0..n)
        .map(|s| {
            let mut d = vec![INF; n];
            d[s] = 0;
            let mut frontier = 1u64 << s;
            let mut seen = frontier;
            let mut level = 0;
            while frontier != 0 {
                level += 1;
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let x = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= adj[x];
                }
                next &= !seen;
                seen |= next;
                let mut nn = next;
                while nn != 0 {
                    let x = nn.trailing_zeros() as usize;
                    nn &= nn - 1;
                    d[x] = level;
                }
                frontier = next;
            }
            d
        })
        .collect()
}

fn dense(g: &Graph) -> (Vec<VertexId>, Vec<u64>) {
    let ids: Vec<VertexId> = g.vertices().collect();
    let adj = ids
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .map(|y| 1u64 << ids.binary_search(y).unwrap())
                .fold(0, |a, b| a | b)
        })
        .collect();
    (ids, adj)
}

/// Flood fill from the lowest bit of `seed` inside `within`.
fn flood(adj: &[u64], seed: u64, within: u64) -> u64 {
    let mut reach = seed & seed.wrapping_neg();
    let mut frontier = reach;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[x];
        }
        next &= within & !reach;
        reach |= next;
        frontier = next;
    }
    reach
}

impl Search {
    fn new(g: &Graph, h: &PatternGraph, allowed: Vec<u64>) -> Search {
        let (_, gadj) = dense(g);
        let (_, hadj) = dense(h);
        let n = gadj.len();
        let k = hadj.len();
        Search {
            n,
            k,
            gdist: bfs_matrix(n, &gadj),
            hdist: bfs_matrix(k, &hadj),
            gadj,
            hadj,
            allowed,
        }
    }

    fn fits(&self, st: &State, i: usize, b: usize) -> bool {
        for x in 0..i {
            let c = st.bag_of[x] as usize;
            if self.hdist[b][c] > self.gdist[x][i] {
                return false;
            }
        }
        true
    }

    /// Every nonempty bag can still become connected.
    fn connectable(&self, st: &State, next: usize) -> bool {
        let unassigned: u64 = if next >= 64 { 0 } else { !0u64 << next } & mask(self.n);
        for b in 0..self.k {
            let bag = st.bags[b];
            if bag == 0 {
                continue;
            }
            let mut pool = 0u64;
            let mut u = unassigned;
            while u != 0 {
                let x = u.trailing_zeros() as usize;
                u &= u - 1;
                if self.allowed[x] >> b & 1 == 1 {
                    pool |= 1 << x;
                }
            }
            if flood(&self.gadj, bag, bag | pool) & bag != bag {
                return false;
            }
        }
        true
    }

    fn complete(&self, st: &State) -> bool {
        for b in 0..self.k {
            let bag = st.bags[b];
            if bag == 0 || flood(&self.gadj, bag, bag) != bag {
                return false;
            }
        }
        for b in 0..self.k {
            let mut nb = 0u64;
            let mut bag = st.bags[b];
            while bag != 0 {
                let x = bag.trailing_zeros() as usize;
                bag &= bag - 1;
                nb |= self.gadj[x];
            }
            let mut hn = self.hadj[b];
            while hn != 0 {
                let c = hn.trailing_zeros() as usize;
                hn &= hn - 1;
                if nb & st.bags[c] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn place(&self, st: &mut State, i: usize, b: usize) -> bool {
        st.bag_of[i] = b as u8;
        st.bags[b] |= 1 << i;
        let empty = st.bags.iter().filter(|&&m| m == 0).count();
        empty < self.n - i && self.connectable(st, i + 1)
    }

    fn unplace(&self, st: &mut State, i: usize, b: usize) {
        st.bags[b] &= !(1 << i);
    }

    fn dfs(&self, st: &mut State, i: usize) -> bool {
        if i == self.n {
            return self.complete(st);
        }
        let mut choices = self.allowed[i];
        while choices != 0 {
            let b = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            if !self.fits(st, i, b) {
                continue;
            }
            if self.place(st, i, b) && self.dfs(st, i + 1) {
                return true;
            }
            self.unplace(st, i, b);
        }
        false
    }

    /// Consistent assignments of the first `depth` vertices, in lex order.
    fn prefixes(&self, depth: usize) -> Vec<State> {
        let mut out = vec![State { bag_of: vec![0; self.n], bags: vec![0; self.k] }];
        for i in 0..depth.min(self.n) {
            let mut next = Vec::new();
            for st in out {
                let mut choices = self.allowed[i];
                while choices != 0 {
                    let b = choices.trailing_zeros() as usize;
                    choices &= choices - 1;
                    let mut s = st.clone();
                    if self.fits(&s, i, b) && self.place(&mut s, i, b) {
                        next.push(s);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn run(&self, mode: Mode) -> Option<Vec<u8>> {
        if self.k == 0 || self.k > self.n {
            return None;
        }
        let depth = 2.min(self.n);
        let starts = self.prefixes(depth);
        par::find_map_first(mode, &starts, |st| {
            let mut st = st.clone();
            self.dfs(&mut st, depth).then(|| st.bag_of.clone())
        })
    }
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn check_size(g: &Graph, k: usize, cfg: &OracleConfig) -> Result<()> {
    let n = g.vertex_count();
    let bound = if k >= 3 { cfg.bound.min(HARD_LIMIT) } else { HARD_LIMIT };
    if n > bound {
        return Err(Error::InstanceTooLarge { n, bound });
    }
    Ok(())
}

fn to_witness(ids: &[VertexId], k: usize, bag_of: &[u8]) -> WitnessStructure {
    let mut bags = vec![VertexSet::new(); k];
    for (i, &b) in bag_of.iter().enumerate() {
        bags[b as usize].insert(ids[i]);
    }
    WitnessStructure::new(bags)
}

fn search(g: &Graph, h: &PatternGraph, allowed: Vec<u64>, cfg: &OracleConfig) -> Option<WitnessStructure> {
    let s = Search::new(g, h, allowed);
    let ids: Vec<VertexId> = g.vertices().collect();
    s.run(cfg.mode).map(|bag_of| to_witness(&ids, h.vertex_count(), &bag_of))
}

/// Lexicographically first `h`-witness of `g` with the default settings.
pub fn oracle_contracts_to(g: &Graph, h: &PatternGraph) -> Result<Option<WitnessStructure>> {
    oracle_contracts_to_with(g, h, &OracleConfig::default())
}

/// Lexicographically first `h`-witness of `g`.
pub fn oracle_contracts_to_with(
    g: &Graph,
    h: &PatternGraph,
    cfg: &OracleConfig,
) -> Result<Option<WitnessStructure>> {
    let k = h.vertex_count();
    check_size(g, k, cfg)?;
    if k > HARD_LIMIT {
        return Ok(None);
    }
    let all = mask(k);
    Ok(search(g, h, vec![all; g.vertex_count()], cfg))
}

/// A `P_k`-witness with end bags `{u}` and `{v}`, default settings.
pub fn oracle_suitable_pair(g: &Graph, u: VertexId, v: VertexId, k: usize) -> Result<Option<WitnessStructure>> {
    oracle_suitable_pair_with(g, u, v, k, &OracleConfig::default())
}

/// A `P_k`-witness with end bags `{u}` and `{v}`.
///
/// Besides the end bags, a vertex `x` may only go to bag `b` with
/// `k-1-dist(x,v) <= b <= dist(u,x)`, which every such witness satisfies.
pub fn oracle_suitable_pair_with(
    g: &Graph,
    u: VertexId,
    v: VertexId,
    k: usize,
    cfg: &OracleConfig,
) -> Result<Option<WitnessStructure>> {
    for x in [u, v] {
        if !g.contains(x) {
            return Err(Error::UnknownVertex(x));
        }
    }
    check_size(g, k, cfg)?;
    if u == v || k < 2 || k > g.vertex_count() {
        return Ok(None);
    }
    let du = g.bfs_distances(u);
    let dv = g.bfs_distances(v);
    let allowed = g
        .vertices()
        .map(|x| {
            if x == u {
                return 1;
            }
            if x == v {
                return 1 << (k - 1);
            }
            let (Some(&a), Some(&b)) = (du.get(&x), dv.get(&x)) else { return 0 };
            let lo = (k - 1).saturating_sub(b).max(1);
            let hi = a.min(k - 2);
            (lo..=hi).fold(0u64, |m, i| m | 1 << i)
        })
        .collect();
    Ok(search(g, &path(k), allowed, cfg))
}

fn diameter(g: &Graph) -> usize {
    g.vertices().map(|v| g.bfs_distances(v).values().copied().max().unwrap_or(0)).max().unwrap_or(0)
}

/// Largest `k` such that `g` contracts to `P_k`, with its witness.
pub fn oracle_longest_path_contraction(g: &Graph) -> Result<(usize, WitnessStructure)> {
    oracle_longest_path_contraction_with(g, &OracleConfig::default())
}

/// As [`oracle_longest_path_contraction`] with explicit settings.
pub fn oracle_longest_path_contraction_with(g: &Graph, cfg: &OracleConfig) -> Result<(usize, WitnessStructure)> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    check_size(g, n.min(3), cfg)?;
    let diam = diameter(g);
    for k in (1..=n.min(diam + 1)).rev() {
        if let Some(w) = oracle_contracts_to_with(g, &path(k), cfg)? {
            return Ok((k, w));
        }
    }
    unreachable!("a connected graph contracts to P1")
}

/// Largest `k >= 3` such that `g` contracts to `C_k`, with its witness.
pub fn oracle_longest_cycle_contraction(g: &Graph) -> Result<Option<(usize, WitnessStructure)>> {
    oracle_longest_cycle_contraction_with(g, &OracleConfig::default())
}

/// As [`oracle_longest_cycle_contraction`] with explicit settings.
pub fn oracle_longest_cycle_contraction_with(
    g: &Graph,
    cfg: &OracleConfig,
) -> Result<Option<(usize, WitnessStructure)>> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    check_size(g, 3, cfg)?;
    let diam = diameter(g);
    for k in (3..=n.min(2 * diam + 1)).rev() {
        if let Some(w) = oracle_contracts_to_with(g, &cycle(k), cfg)? {
            return Ok(Some((k, w)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::star;
    use crate::witness::verify_witness;

    fn set(xs: &[VertexId]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn paths_contract_to_shorter_paths() {
        for n in 1..=8 {
            for k in 1..=n {
                let w = oracle_contracts_to(&path(n), &path(k)).unwrap().expect("suffix merge");
                assert!(verify_witness(&path(n), &path(k), &w).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn lexicographically_first_witness() {
        let w = oracle_contracts_to(&path(5), &path(3)).unwrap().unwrap();
        // assignment vector (0, 0, 0, 1, 2)
        assert_eq!(w.bags, vec![set(&[0, 1, 2]), set(&[3]), set(&[4])]);
    }

    #[test]
    fn cycles_do_not_contract_to_p4() {
        for n in 3..=9 {
            assert!(oracle_contracts_to(&cycle(n), &path(4)).unwrap().is_none());
        }
    }

    #[test]
    fn longest_path_examples() {
        for n in 1..=9 {
            assert_eq!(oracle_longest_path_contraction(&path(n)).unwrap().0, n);
        }
        for n in 3..=8 {
            assert_eq!(oracle_longest_path_contraction(&cycle(n)).unwrap().0, 2);
        }
        assert_eq!(oracle_longest_path_contraction(&star(3)).unwrap().0, 3);
        assert_eq!(oracle_longest_path_contraction(&Graph::with_vertices(2)), Err(Error::NotConnected));
    }

    #[test]
    fn longest_cycle_examples() {
        for n in 3..=8 {
            assert_eq!(oracle_longest_cycle_contraction(&cycle(n)).unwrap().unwrap().0, n);
        }
        assert!(oracle_longest_cycle_contraction(&star(4)).unwrap().is_none());
        assert!(oracle_longest_cycle_contraction(&path(6)).unwrap().is_none());
    }

    #[test]
    fn suitable_pair_examples() {
        let w = oracle_suitable_pair(&path(4), 0, 3, 4).unwrap().unwrap();
        assert_eq!(w.bags, vec![set(&[0]), set(&[1]), set(&[2]), set(&[3])]);
        let c6 = cycle(6);
        for u in 0..6 {
            for v in 0..6 {
                assert!(oracle_suitable_pair(&c6, u, v, 4).unwrap().is_none());
            }
        }
        // u=0, a=1, b=2, c=3, d=4, v=5
        let hshape = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5)]);
        let w = oracle_suitable_pair(&hshape, 0, 5, 4).unwrap().unwrap();
        assert_eq!(w.bags[1], set(&[1, 2, 3]));
        assert!(verify_witness(&hshape, &path(4), &w).unwrap().is_valid());
    }

    #[test]
    fn size_bound_is_enforced() {
        let big = path(13);
        assert!(matches!(oracle_contracts_to(&big, &path(4)), Err(Error::InstanceTooLarge { n: 13, bound: 12 })));
        let cfg = OracleConfig { bound: 20, mode: Mode::Sequential };
        assert!(oracle_contracts_to_with(&big, &path(4), &cfg).unwrap().is_some());
        assert!(oracle_contracts_to(&big, &path(2)).unwrap().is_some());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (1, 5)]);
        for k in 2..=5 {
            let a = oracle_contracts_to_with(&g, &path(k), &OracleConfig { bound: 12, mode: Mode::Sequential });
            let b = oracle_contracts_to_with(&g, &path(k), &OracleConfig { bound: 12, mode: Mode::Parallel });
            assert_eq!(a, b);
        }
    }
}
