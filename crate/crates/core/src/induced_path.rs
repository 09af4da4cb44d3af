//! Longest induced path by depth-first extension with branch and bound.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, PatternGraph, VertexId};
use crate::par::{self, Mode};
use crate::patterns::path;

/// Default vertex bound for the uncapped search.
pub const DEFAULT_LIP_BOUND: usize = 16;

/// True when `seq` is an induced path of `g`.
pub fn is_induced_path(g: &Graph, seq: &[VertexId]) -> bool {
    let distinct: std::collections::BTreeSet<_> = seq.iter().collect();
    if distinct.len() != seq.len() || seq.iter().any(|&x| !g.contains(x)) {
        return false;
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if g.has_edge(seq[i], seq[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

struct Lip<'a> {
    adj: &'a [Bits],
    cap: usize,
}

struct Best {
    path: Vec<usize>,
}

impl Lip<'_> {
    /// `free`: vertices that may still join (not on the path and not
    /// adjacent to any path vertex other than the last).
    fn extend(&self, cur: &mut Vec<usize>, free: &Bits, best: &mut Best) {
        if cur.len() > best.path.len() {
            best.path = cur.clone();
        }
        if cur.len() >= self.cap || best.path.len() >= self.cap {
            return;
        }
        if cur.len() + free.count() <= best.path.len() {
            return;
        }
        let last = *cur.last().unwrap();
        let mut cand = self.adj[last].clone();
        cand.and_with(free);
        for y in cand.iter() {
            let mut next_free = free.clone();
            next_free.and_not_with(&self.adj[last]);
            next_free.remove(y);
            cur.push(y);
            self.extend(cur, &next_free, best);
            cur.pop();
        }
    }

    fn longest_from(&self, s: usize, n: usize) -> Vec<usize> {
        let mut free = Bits::full(n);
        free.remove(s);
        let mut best = Best { path: Vec::new() };
        self.extend(&mut vec![s], &free, &mut best);
        best.path
    }
}

/// A longest induced path, lexicographically smallest among the longest.
///
/// With `cap`, only paths with at most `cap` vertices are considered.
pub fn longest_induced_path(g: &Graph, cap: Option<usize>) -> Result<Vec<VertexId>> {
    longest_induced_path_with(g, cap, DEFAULT_LIP_BOUND, Mode::default())
}

/// As [`longest_induced_path`] with an explicit uncapped bound and mode.
pub fn longest_induced_path_with(g: &Graph, cap: Option<usize>, bound: usize, mode: Mode) -> Result<Vec<VertexId>> {
    let n = g.vertex_count();
    if cap.is_none() && n > bound {
        return Err(Error::CapTooLargeForExhaustive { n, bound });
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    let adj: Vec<Bits> = ids
        .iter()
        .map(|&v| {
            let mut b = Bits::new(n);
            for y in g.neighbors(v) {
                b.insert(ids.binary_search(y).unwrap());
            }
            b
        })
        .collect();
    let lip = Lip { adj: &adj, cap: cap.unwrap_or(n) };
    if lip.cap == 0 || n == 0 {
        return Ok(Vec::new());
    }
    let starts: Vec<usize> = (0..n).collect();
    let per_start = par::map(mode, &starts, |&s| lip.longest_from(s, n));
    let mut best: Vec<usize> = Vec::new();
    for p in per_start {
        if p.len() > best.len() {
            best = p;
        }
    }
    let out: Vec<VertexId> = best.iter().map(|&i| ids[i]).collect();
    assert!(is_induced_path(g, &out), "search returned a non-induced path");
    Ok(out)
}

/// Smallest `k` such that `h` is an induced subgraph of `P_k`.
pub fn path_host_size(h: &PatternGraph) -> Result<usize> {
    if !h.is_linear_forest() {
        return Err(Error::NotLinearForest);
    }
    let mut k = h.vertex_count();
    while path(k).contains_induced_bounded(h, usize::MAX)?.is_none() {
        k += 1;
    }
    Ok(k)
}

/// Longest induced path of an `h`-free graph for a linear forest `h`.
///
/// With `k` the smallest path containing `h`, the graph has no induced
/// `P_k`, so the search is capped at `k-1` vertices.
pub fn lip_h_free(g: &Graph, h: &PatternGraph) -> Result<Vec<VertexId>> {
    let k = path_host_size(h)?;
    if g.contains_induced(h)?.is_some() {
        return Err(Error::NotInClass(crate::patterns::describe(h)));
    }
    longest_induced_path(g, Some(k.saturating_sub(1)))
}
