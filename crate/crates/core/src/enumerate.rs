//! Small graphs up to isomorphism and random class members.
//!
//! Connected graphs on `n` vertices arise from connected graphs on `n - 1`
//! vertices by adding a vertex with a nonempty neighbourhood: every
//! connected graph has a non-cut vertex. The classes are hereditary, so the
//! same extension restricted to members enumerates each class.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::suitability::GraphClass;

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL: usize = 11;

/// Adjacency rows of `g` relabelled to `0..n` in ascending id order.
fn rows(g: &Graph) -> Vec<u32> {
    let ids: Vec<VertexId> = g.vertices().collect();
    ids.iter().map(|&v| g.neighbors(v).iter().fold(0u32, |r, y| r | 1 << ids.binary_search(y).unwrap())).collect()
}

/// Smallest adjacency code over all orders that list the colour cells in
/// a fixed sequence. Placing a vertex appends its adjacency to the earlier
/// positions, so prefixes are compared as the order grows; of two twins only
/// the smaller id is tried first, since swapping twins is an automorphism.
fn best_code(rows: &[u32], cells: &[Vec<usize>]) -> u64 {
    struct S<'a> {
        rows: &'a [u32],
        slots: Vec<usize>,
        total: u32,
        best: u64,
    }
    fn twins(rows: &[u32], x: usize, y: usize) -> bool {
        rows[x] & !(1 << y) == rows[y] & !(1 << x)
    }
    fn rec(s: &mut S, perm: &mut Vec<usize>, used: u32, code: u64, bits: u32, cells: &[Vec<usize>]) {
        let pos = perm.len();
        if pos == s.rows.len() {
            s.best = s.best.min(code);
            return;
        }
        if bits > 0 && s.best != u64::MAX && code > s.best >> (s.total - bits) {
            return;
        }
        let cell = &cells[s.slots[pos]];
        for &x in cell {
            if used >> x & 1 == 1 || cell.iter().any(|&y| y < x && used >> y & 1 == 0 && twins(s.rows, x, y)) {
                continue;
            }
            let mut c = code;
            for &p in perm.iter() {
                c = c << 1 | (s.rows[p] >> x & 1) as u64;
            }
            perm.push(x);
            rec(s, perm, used | 1 << x, c, bits + pos as u32, cells);
            perm.pop();
        }
    }
    let n = rows.len();
    let slots = cells.iter().enumerate().flat_map(|(i, c)| std::iter::repeat_n(i, c.len())).collect();
    let mut s = S { rows, slots, total: (n * n.saturating_sub(1) / 2) as u32, best: u64::MAX };
    rec(&mut s, &mut Vec::new(), 0, 0, 0, cells);
    s.best
}

/// An isomorphism invariant that identifies graphs up to isomorphism.
///
/// # Panics
/// Panics if `g` has more than [`MAX_CANONICAL`] vertices.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.vertex_count();
    assert!(n <= MAX_CANONICAL, "canonical form supports at most {MAX_CANONICAL} vertices");
    let rows = rows(g);
    // colour refinement from degrees until the number of colours is stable
    let mut colour: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|i| {
                let mut nc: Vec<usize> = (0..n).filter(|&j| rows[i] >> j & 1 == 1).map(|j| colour[j]).collect();
                nc.sort_unstable();
                (colour[i], nc)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig.iter().map(|x| distinct.binary_search(x).unwrap()).collect();
        let stable = distinct.len() == colour.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if stable {
            break;
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (colour[i], i));
    for (k, &x) in order.iter().enumerate() {
        if k > 0 && colour[order[k - 1]] == colour[x] {
            cells.last_mut().unwrap().push(x);
        } else {
            cells.push(vec![x]);
        }
    }
    (n, best_code(&rows, &cells))
}

fn extend(g: &Graph, nbrs: u32) -> Graph {
    let n = g.vertex_count() as VertexId;
    let mut h = g.clone();
    h.add_vertex(n);
    for y in 0..n {
        if nbrs >> y & 1 == 1 {
            h.add_edge(n, y).expect("fresh edge");
        }
    }
    h
}

fn graphs_where(n: usize, connected: bool, mut keep: impl FnMut(&Graph) -> Result<bool>) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::with_vertices(1)];
    if !keep(&level[0])? {
        return Ok(Vec::new());
    }
    let first = if connected { 1 } else { 0 };
    for m in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in first..1u32 << m {
                let h = extend(g, nbrs);
                if keep(&h)? && seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Connected graphs with exactly `n` vertices that satisfy `keep`, one per
/// isomorphism class, on vertex ids `0..n`. `keep` must be hereditary.
pub fn connected_graphs_where(n: usize, keep: impl FnMut(&Graph) -> Result<bool>) -> Result<Vec<Graph>> {
    graphs_where(n, true, keep)
}

/// All graphs with exactly `n` vertices that satisfy the hereditary
/// property `keep`, one per isomorphism class, on ids `0..n`.
///
/// A graph minus its largest id is again such a graph, so extension by a
/// vertex with any neighbourhood reaches every class.
pub fn all_graphs_where(n: usize, keep: impl FnMut(&Graph) -> Result<bool>) -> Result<Vec<Graph>> {
    graphs_where(n, false, keep)
}

/// All graphs with exactly `n` vertices up to isomorphism, on ids `0..n`.
pub fn graphs(n: usize) -> Vec<Graph> {
    all_graphs_where(n, |_| Ok(true)).expect("no filter errors")
}

/// Connected graphs with exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_where(n, |_| Ok(true)).expect("no filter errors")
}

/// Connected members of `class` with exactly `n` vertices up to isomorphism.
pub fn connected_class_graphs(n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    connected_graphs_where(n, |g| class.contains(g))
}

/// A random connected member of `class` on `n` vertices, grown one vertex
/// at a time; each step retries up to `attempts` neighbourhoods.
pub fn random_class_graph<R: Rng>(rng: &mut R, n: usize, class: GraphClass, attempts: usize) -> Result<Option<Graph>> {
    let mut g = Graph::with_vertices(1.min(n));
    for m in 1..n {
        let density = rng.gen_range(0.2..0.9);
        let mut grown = None;
        for _ in 0..attempts {
            let nbrs = (0..m).fold(0u32, |r, y| if rng.gen_bool(density) { r | 1 << y } else { r });
            if nbrs == 0 {
                continue;
            }
            let h = extend(&g, nbrs);
            if class.contains(&h)? {
                grown = Some(h);
                break;
            }
        }
        match grown {
            Some(h) => g = h,
            None => return Ok(None),
        }
    }
    Ok(Some(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{cycle, path};

    #[test]
    fn counts_match_known_sequence() {
        // connected graphs on n unlabelled vertices: 1, 1, 2, 6, 21, 112, 853
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        // all graphs: 1, 2, 4, 11, 34, 156
        let all: Vec<usize> = (1..=6).map(|n| graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let b = Graph::from_edges(5, &[(3, 0), (0, 4), (4, 1), (1, 2)]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&path(5)), canonical_form(&cycle(5)));
    }

    #[test]
    fn random_members_are_members() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = random_class_graph(&mut rng, 9, GraphClass::P1P5, 200).unwrap().unwrap();
            assert_eq!(g.vertex_count(), 9);
            assert!(g.is_connected() && GraphClass::P1P5.contains(&g).unwrap());
        }
    }
}
