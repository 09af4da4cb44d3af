//! Text formats for graphs, hypergraphs and role sidecars.
//!
//! Graph: first line `n m`, then `m` lines `u v` with 0-based ids. Lines
//! starting with `#` are comments. The writer emits edges sorted, so a
//! written graph re-parses to an identical value.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::hardness::{Hypergraph, Role};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("expected a number, found {tok:?}") })
}

/// Parses the graph text format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    if header.len() != 2 {
        return Err(Error::Parse { line: hl, msg: "header must be `n m`".into() });
    }
    let n: usize = num(header[0], hl)?;
    let m: usize = num(header[1], hl)?;
    let mut g = Graph::with_vertices(n);
    let mut count = 0;
    for (line, toks) in lines {
        if toks.len() != 2 {
            return Err(Error::Parse { line, msg: "edge line must be `u v`".into() });
        }
        let u: VertexId = num(toks[0], line)?;
        let v: VertexId = num(toks[1], line)?;
        if u as usize >= n || v as usize >= n || u == v {
            return Err(Error::Parse { line, msg: format!("invalid edge {u} {v}") });
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse { line, msg: format!("duplicate edge {u} {v}") });
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::Parse { line: hl, msg: format!("header announces {m} edges, found {count}") });
    }
    Ok(g)
}

/// Writes the graph text format. Vertex ids are renumbered to `0..n` in
/// ascending order when they are not already dense.
pub fn write_graph(g: &Graph) -> String {
    let g = g.normalized();
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses the hypergraph format: `m n`, then `n` lines `k e_1 .. e_k`.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    if header.len() != 2 {
        return Err(Error::Parse { line: hl, msg: "header must be `m n`".into() });
    }
    let m: usize = num(header[0], hl)?;
    let n: usize = num(header[1], hl)?;
    let mut edges = Vec::new();
    for (line, toks) in lines {
        let k: usize = num(toks[0], line)?;
        if toks.len() != k + 1 || k == 0 {
            return Err(Error::Parse { line, msg: "hyperedge line must be `k e_1 .. e_k` with k >= 1".into() });
        }
        let mut e = std::collections::BTreeSet::new();
        for t in &toks[1..] {
            let x: usize = num(t, line)?;
            if x >= m {
                return Err(Error::Parse { line, msg: format!("element {x} out of range") });
            }
            e.insert(x);
        }
        edges.push(e);
    }
    if edges.len() != n {
        return Err(Error::Parse { line: hl, msg: format!("header announces {n} hyperedges, found {}", edges.len()) });
    }
    Ok(Hypergraph::new(m, edges))
}

/// Writes the hypergraph format.
pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.m, h.edges.len());
    for e in &h.edges {
        let items: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{} {}", e.len(), items.join(" ")).unwrap();
    }
    out
}

/// Writes a role sidecar: one `id role` line per vertex.
pub fn write_roles(roles: &[(VertexId, Role)]) -> String {
    let mut out = String::new();
    for (v, r) in roles {
        writeln!(out, "{v} {r}").unwrap();
    }
    out
}

/// Parses a role sidecar.
pub fn parse_roles(text: &str) -> Result<Vec<(VertexId, Role)>> {
    data_lines(text)
        .map(|(line, toks)| {
            if toks.len() != 2 {
                return Err(Error::Parse { line, msg: "role line must be `id role`".into() });
            }
            let v: VertexId = num(toks[0], line)?;
            let r: Role = toks[1].parse().map_err(|msg| Error::Parse { line, msg })?;
            Ok((v, r))
        })
        .collect()
}
