//! Constructors and a small text syntax for pattern graphs.
//!
//! Syntax: terms joined by `+`, each an optional multiplicity followed by
//! `P<k>` (path), `C<k>` (cycle), `K<k>` (clique) or `K<a>,<b>` /
//! `K_{a,b}` (complete bipartite). Examples: `P2+P4`, `2P1+2P2`, `K_{1,3}`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// The path on `k` vertices `0-1-..-(k-1)`.
pub fn path(k: usize) -> Graph {
    let edges: Vec<_> = (1..k as VertexId).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges)
}

/// The cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..k as VertexId).map(|i| (i - 1, i)).collect();
    edges.push((0, k as VertexId - 1));
    Graph::from_edges(k, &edges)
}

/// The complete graph on `k` vertices.
pub fn complete(k: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..k as VertexId {
        for b in a + 1..k as VertexId {
            edges.push((a, b));
        }
    }
    Graph::from_edges(k, &edges)
}

/// Complete bipartite graph `K_{a,b}`; the first side is `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for x in 0..a as VertexId {
        for y in 0..b as VertexId {
            edges.push((x, a as VertexId + y));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// The star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// Disjoint union, renumbering the parts consecutively.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n: usize = parts.iter().map(Graph::vertex_count).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for p in parts {
        let p = p.normalized();
        edges.extend(p.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        offset += p.vertex_count() as VertexId;
    }
    Graph::from_edges(n, &edges)
}

/// Disjoint union of paths with the given vertex counts.
pub fn linear_forest(sizes: &[usize]) -> Graph {
    disjoint_union(&sizes.iter().map(|&k| path(k)).collect::<Vec<_>>())
}

/// `sP1 + P4`.
pub fn s_p1_p4(s: usize) -> Graph {
    let mut sizes = vec![1; s];
    sizes.push(4);
    linear_forest(&sizes)
}

/// Parses the pattern syntax described in the module docs.
pub fn parse_pattern(text: &str) -> Result<Graph> {
    let bad = |msg: &str| Error::Parse { line: 1, msg: format!("{msg}: {text:?}") };
    let mut parts = Vec::new();
    for term in text.split('+') {
        let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
        let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
        let mult: usize = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| bad("bad multiplicity"))? };
        let rest = &term[digits.len()..];
        let mut chars = rest.chars();
        let kind = chars.next().ok_or_else(|| bad("empty term"))?;
        let arg: String = chars.filter(|c| !matches!(c, '_' | '{' | '}')).collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad("bad size"));
        let g = match kind.to_ascii_uppercase() {
            'P' => {
                let k = num(&arg)?;
                if k == 0 {
                    return Err(bad("empty path"));
                }
                path(k)
            }
            'C' => {
                let k = num(&arg)?;
                if k < 3 {
                    return Err(bad("cycle needs at least 3 vertices"));
                }
                cycle(k)
            }
            'K' => match arg.split_once(',') {
                Some((a, b)) => complete_bipartite(num(a)?, num(b)?),
                None => complete(num(&arg)?),
            },
            _ => return Err(bad("unknown term")),
        };
        for _ in 0..mult {
            parts.push(g.clone());
        }
    }
    Ok(disjoint_union(&parts))
}

/// Human-readable name of a linear forest such as `2P1+P4`; other graphs
/// are described by their vertex and edge counts.
pub fn describe(h: &Graph) -> String {
    if !h.is_linear_forest() {
        return format!("graph({} vertices, {} edges)", h.vertex_count(), h.edge_count());
    }
    let mut sizes: Vec<usize> = h.components().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sizes.len() {
        let j = sizes[i..].iter().take_while(|&&s| s == sizes[i]).count();
        out.push(if j == 1 { format!("P{}", sizes[i]) } else { format!("{j}P{}", sizes[i]) });
        i += j;
    }
    out.join("+")
}
