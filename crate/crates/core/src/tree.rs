//! Labeled trees, simple graphs and tree isomorphism codes.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::TreeError;

/// A tree on vertices `0..n` with `n - 1` edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tree {
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<u32>>,
}

/// A simple graph: no loops, no parallel edges, isolated vertices allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
}

pub(crate) struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }

    /// Sizes of all components, in no particular order.
    pub(crate) fn component_sizes(&mut self) -> Vec<u32> {
        let mut sizes = Vec::new();
        for v in 0..self.parent.len() as u32 {
            if self.find(v) == v {
                sizes.push(self.size[v as usize]);
            }
        }
        sizes
    }
}

fn check_simple_edges(n: usize, edges: &[(u32, u32)]) -> Result<(), TreeError> {
    let mut seen = BTreeSet::new();
    for &(u, v) in edges {
        if u as usize >= n || v as usize >= n {
            return Err(TreeError::VertexOutOfRange { u, v, vertices: n });
        }
        if u == v {
            return Err(TreeError::SelfLoop(u));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(TreeError::DuplicateEdge(u, v));
        }
    }
    Ok(())
}

impl Tree {
    pub fn from_edges(vertex_count: usize, edges: Vec<(u32, u32)>) -> Result<Self, TreeError> {
        if vertex_count == 0 {
            return Err(TreeError::NoVertices);
        }
        check_simple_edges(vertex_count, &edges)?;
        let mut sets = DisjointSets::new(vertex_count);
        for &(u, v) in &edges {
            if !sets.union(u, v) {
                return Err(TreeError::Cycle(u, v));
            }
        }
        if edges.len() != vertex_count - 1 {
            return Err(TreeError::Disconnected);
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        Ok(Tree { edges, adjacency })
    }

    /// Decodes a Prüfer sequence over `0..seq.len() + 2`.
    pub fn from_prufer(seq: &[u32]) -> Result<Self, TreeError> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&v| v as usize >= n) {
            return Err(TreeError::VertexOutOfRange {
                u: bad,
                v: bad,
                vertices: n,
            });
        }
        let mut degree = vec![1u32; n];
        for &v in seq {
            degree[v as usize] += 1;
        }
        let mut leaves: BTreeSet<u32> =
            (0..n as u32).filter(|&v| degree[v as usize] == 1).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &v in seq {
            let leaf = leaves.pop_first().expect("a leaf always exists");
            edges.push((leaf, v));
            degree[v as usize] -= 1;
            if degree[v as usize] == 1 {
                leaves.insert(v);
            }
        }
        let u = leaves.pop_first().unwrap();
        let w = leaves.pop_first().unwrap();
        edges.push((u, w));
        Tree::from_edges(n, edges)
    }

    pub fn single_vertex() -> Self {
        Tree {
            edges: Vec::new(),
            adjacency: vec![Vec::new()],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Number of degree-one vertices.
    pub fn leaf_count(&self) -> usize {
        self.adjacency.iter().filter(|adj| adj.len() == 1).count()
    }

    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph {
            vertex_count: self.vertex_count(),
            edges: self.edges.clone(),
        }
    }

    /// The tree with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> Tree {
        assert_eq!(perm.len(), self.vertex_count());
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Tree::from_edges(self.vertex_count(), edges).expect("a permutation preserves treeness")
    }

    /// The one or two vertices of minimum eccentricity.
    pub fn centers(&self) -> Vec<u32> {
        let n = self.vertex_count();
        if n <= 2 {
            return (0..n as u32).collect();
        }
        let mut degree: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let mut layer: Vec<u32> = (0..n as u32).filter(|&v| degree[v as usize] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in &self.adjacency[leaf as usize] {
                    degree[w as usize] -= 1;
                    if degree[w as usize] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Parent pointers and a pre-order (parents before children) for the
    /// tree rooted at `root`.
    pub fn rooted_order(&self, root: u32) -> (Vec<Option<u32>>, Vec<u32>) {
        let mut parent = vec![None; self.vertex_count()];
        let mut order = Vec::with_capacity(self.vertex_count());
        let mut stack = vec![root];
        let mut visited = vec![false; self.vertex_count()];
        visited[root as usize] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &self.adjacency[v as usize] {
                if !visited[w as usize] {
                    visited[w as usize] = true;
                    parent[w as usize] = Some(v);
                    stack.push(w);
                }
            }
        }
        (parent, order)
    }

    /// AHU code of every rooted subtree when the tree is rooted at `root`:
    /// a vertex's code is `(` followed by its children's codes in sorted
    /// order and `)`.
    pub fn subtree_codes(&self, root: u32) -> Vec<Vec<u8>> {
        let (parent, order) = self.rooted_order(root);
        let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); self.vertex_count()];
        let mut codes: Vec<Vec<u8>> = vec![Vec::new(); self.vertex_count()];
        for &v in order.iter().rev() {
            let mut children = core::mem::take(&mut child_codes[v as usize]);
            children.sort_unstable();
            let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
            code.push(b'(');
            for c in children {
                code.extend_from_slice(&c);
            }
            code.push(b')');
            if let Some(p) = parent[v as usize] {
                child_codes[p as usize].push(code.clone());
            }
            codes[v as usize] = code;
        }
        codes
    }

    /// Isomorphism invariant: the smaller rooted code over the tree's
    /// centers.
    pub fn canonical_code(&self) -> CanonicalCode {
        self.centers()
            .into_iter()
            .map(|c| CanonicalCode(self.subtree_codes(c).swap_remove(c as usize)))
            .min()
            .expect("every tree has a center")
    }
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: Vec<(u32, u32)>) -> Result<Self, TreeError> {
        if vertex_count == 0 {
            return Err(TreeError::NoVertices);
        }
        check_simple_edges(vertex_count, &edges)?;
        Ok(SimpleGraph {
            vertex_count,
            edges,
        })
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(n, edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }
}

/// Balanced-parenthesis isomorphism code, e.g. `((()())())`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        core::str::from_utf8(&self.0).expect("parentheses are ASCII")
    }

    pub fn into_string(self) -> String {
        String::from_utf8(self.0).expect("parentheses are ASCII")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
