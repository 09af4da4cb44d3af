//! Complexity status of longest induced path and longest path
//! contractibility on `H`-free graphs, by the structure of `H`.

use std::fmt;

use crate::graph::PatternGraph;
use crate::patterns::{describe, linear_forest, s_p1_p4};

/// The problem a verdict is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    /// Longest induced path.
    Lip,
    /// Longest path contractibility.
    Lpc,
}

/// Polynomial-time solvable or NP-complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Polynomial,
    NpComplete,
}

/// A status with the case of the classification that decides it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub problem: Problem,
    pub status: Status,
    pub reason: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.problem {
            Problem::Lip => "LIP",
            Problem::Lpc => "LPC",
        };
        let s = match self.status {
            Status::Polynomial => "P",
            Status::NpComplete => "NPc",
        };
        write!(f, "{p}: {s} — {}", self.reason)
    }
}

fn verdict(problem: Problem, status: Status, reason: impl Into<String>) -> Verdict {
    Verdict { problem, status, reason: reason.into() }
}

fn has_cycle(h: &PatternGraph) -> bool {
    !h.is_forest()
}

fn induced_in(h: &PatternGraph, host: &PatternGraph) -> bool {
    host.contains_induced_bounded(h, usize::MAX).expect("unbounded search").is_some()
}

/// Longest induced path: polynomial exactly for linear forests.
pub fn classify_lip(h: &PatternGraph) -> Verdict {
    if h.is_linear_forest() {
        verdict(Problem::Lip, Status::Polynomial, "linear forest")
    } else if has_cycle(h) {
        verdict(Problem::Lip, Status::NpComplete, "contains a cycle")
    } else {
        verdict(Problem::Lip, Status::NpComplete, "forest with a vertex of degree at least 3")
    }
}

/// The maximal patterns with a polynomial-time case, in order, for `h`.
fn easy_hosts(h: &PatternGraph) -> [(String, PatternGraph); 4] {
    [
        ("P2+P4".to_string(), linear_forest(&[2, 4])),
        ("P1+P2+P3".to_string(), linear_forest(&[1, 2, 3])),
        ("P1+P5".to_string(), linear_forest(&[1, 5])),
        ("sP1+P4".to_string(), s_p1_p4(h.vertex_count())),
    ]
}

/// Longest path contractibility: polynomial exactly when `h` is an induced
/// subgraph of `P2+P4`, `P1+P2+P3`, `P1+P5` or `sP1+P4` for some `s`.
/// NP-complete verdicts carry the case label of [`lpc_case_analysis`].
pub fn classify_lpc(h: &PatternGraph) -> Verdict {
    for (name, host) in easy_hosts(h) {
        if induced_in(h, &host) {
            return verdict(Problem::Lpc, Status::Polynomial, format!("induced subgraph of {name}"));
        }
    }
    let case = lpc_case_analysis(h);
    verdict(Problem::Lpc, Status::NpComplete, case.reason)
}

/// Longest path contractibility decided by the case analysis on cycles,
/// degrees and the components of a linear forest.
pub fn lpc_case_analysis(h: &PatternGraph) -> Verdict {
    let np = |r: String| verdict(Problem::Lpc, Status::NpComplete, r);
    let p = |r: String| verdict(Problem::Lpc, Status::Polynomial, r);
    if has_cycle(h) {
        return np("contains a cycle".into());
    }
    if !h.is_linear_forest() {
        return np("contains an induced K1,3".into());
    }
    let mut sizes: Vec<usize> = h.components().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    let edged: Vec<usize> = sizes.iter().copied().filter(|&x| x >= 2).collect();
    let isolated = sizes.len() - edged.len();
    let name = describe(h);
    if edged.is_empty() {
        return p(format!("{name} has no edge"));
    }
    match sizes.len() {
        1 => {
            let r = sizes[0];
            if r <= 5 {
                p(format!("Case 3: P_r with r={r}"))
            } else {
                np(format!("Case 3: P_r with r={r} contains P6"))
            }
        }
        2 => {
            let (r, s) = (sizes[0], sizes[1]);
            if r >= 3 {
                np(format!("Case 2: P_r+P_s with r={r} contains 2P3"))
            } else if s >= 6 {
                np(format!("Case 2: P_r+P_s with s={s} contains P6"))
            } else if s <= 4 || r == 1 {
                p(format!("Case 2: P_r+P_s with r={r}, s={s}"))
            } else {
                np(format!("Case 2: P_r+P_s with s={s} contains 3P2"))
            }
        }
        _ => match edged.len() {
            1 => {
                let r = edged[0];
                if r <= 4 {
                    p(format!("Case 1: sP1+P_r with r={r}"))
                } else if r >= 6 {
                    np(format!("Case 1: sP1+P_r with r={r} contains P6"))
                } else {
                    np(format!("Case 1: sP1+P5 with s={isolated} contains 2P1+2P2"))
                }
            }
            2 => {
                let (r, s) = (edged[0], edged[1]);
                if sizes.len() >= 4 {
                    np("Case 1: two edged components and four components contain 2P1+2P2".into())
                } else if s >= 4 {
                    np(format!("Case 1: P1+P_r+P_s with s={s} contains 2P1+2P2"))
                } else if r == 3 {
                    np("Case 1: P1+2P3 contains 2P3".into())
                } else {
                    p(format!("Case 1: P1+P_r+P_s with r={r}, s={s}"))
                }
            }
            _ => np("Case 1: three edged components contain 3P2".into()),
        },
    }
}
