//! Plain-text edge lists: one `u v` pair per line, `#` comments.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use thiserror::Error;
use ucat_core::Tree;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected two vertex labels \"u v\", found {text:?}")]
    Syntax { line: usize, text: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("line {line}: edge {u} {v} closes a cycle")]
    Cycle { line: usize, u: u32, v: u32 },
    #[error("edge list is disconnected: {components} components")]
    Disconnected { components: usize },
    #[error("edge list contains no edges")]
    Empty,
}

struct Edge {
    line: usize,
    u: u32,
    v: u32,
}

fn parse_label(token: &str) -> Option<u32> {
    token.parse().ok()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Parses an edge list into a tree.
///
/// Labels are expected to be `0..n`. Any other label set is compacted to
/// `0..n` in increasing order, with a warning.
pub fn parse_tree(text: &str) -> Result<Tree, EdgeListError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let syntax = || EdgeListError::Syntax {
            line,
            text: raw.to_string(),
        };
        if tokens.len() != 2 {
            return Err(syntax());
        }
        let u = parse_label(tokens[0]).ok_or_else(syntax)?;
        let v = parse_label(tokens[1]).ok_or_else(syntax)?;
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        edges.push(Edge { line, u, v });
    }
    if edges.is_empty() {
        return Err(EdgeListError::Empty);
    }

    let labels: BTreeSet<u32> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
    let n = labels.len();
    let contiguous = labels.iter().next_back().map(|&m| m as usize + 1) == Some(n);
    if !contiguous {
        log::warn!("vertex labels are not 0..{n}; compacting them in increasing order");
    }
    let index: Vec<u32> = labels.iter().copied().collect();
    let relabel = |x: u32| index.binary_search(&x).expect("label was collected") as u32;

    let mut seen = HashSet::new();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut tree_edges = Vec::with_capacity(edges.len());
    for e in &edges {
        let (u, v) = (relabel(e.u), relabel(e.v));
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeListError::DuplicateEdge {
                line: e.line,
                u: e.u,
                v: e.v,
            });
        }
        let (ru, rv) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        if ru == rv {
            return Err(EdgeListError::Cycle {
                line: e.line,
                u: e.u,
                v: e.v,
            });
        }
        parent[ru] = rv;
        tree_edges.push((u, v));
    }
    if tree_edges.len() + 1 != n {
        return Err(EdgeListError::Disconnected {
            components: n - tree_edges.len(),
        });
    }
    Ok(Tree::from_edges(n, tree_edges).expect("validated as a tree"))
}

/// One `u v` line per edge, in the tree's edge order.
pub fn render_edge_list(tree: &Tree) -> String {
    let mut out = String::new();
    for &(u, v) in tree.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
