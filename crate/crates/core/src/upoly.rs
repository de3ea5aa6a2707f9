//! U-polynomials of simple graphs and trees.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::composition::Partition;
use crate::error::TreeError;
use crate::poly::{GraphUPolynomial, PartitionPolynomial};
use crate::tree::{DisjointSets, SimpleGraph, Tree};

/// Largest edge count accepted by [`u_polynomial_bruteforce`].
pub const MAX_BRUTE_FORCE_EDGES: usize = 24;

/// U_G(x, y) = Σ_{A ⊆ E} x_{λ(A)} (y − 1)^{|A| − r(A)} by visiting all
/// 2^{|E|} edge subsets, where r(A) = |V| − k(G|_A).
pub fn u_polynomial_bruteforce(graph: &SimpleGraph) -> Result<GraphUPolynomial, TreeError> {
    let edges = graph.edges();
    if edges.len() > MAX_BRUTE_FORCE_EDGES {
        return Err(TreeError::TooManyEdges {
            edges: edges.len(),
            cap: MAX_BRUTE_FORCE_EDGES,
        });
    }
    let n = graph.vertex_count();
    let mut counts: BTreeMap<(Partition, u32), i64> = BTreeMap::new();
    for mask in 0u64..1 << edges.len() {
        let mut sets = DisjointSets::new(n);
        let mut chosen = 0u32;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                chosen += 1;
                sets.union(u, v);
            }
        }
        let sizes = sets.component_sizes();
        let rank = (n - sizes.len()) as u32;
        *counts
            .entry((Partition::from_unsorted(sizes), chosen - rank))
            .or_insert(0) += 1;
    }
    let mut poly = GraphUPolynomial::new();
    for ((lambda, j), c) in counts {
        poly.add_term(lambda, j, c);
    }
    Ok(poly)
}

// (sizes of components already cut off, in descending order; size of the
// component containing the subtree root) -> number of edge subsets.
type SubtreeStates = BTreeMap<(Vec<u32>, u32), i64>;

fn merge_desc(a: &[u32], b: &[u32], extra: Option<u32>) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len() + 1);
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.extend(extra);
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// U_T(x) for a tree by dynamic programming over rooted subtrees.
///
/// Rooted at vertex 0. Each vertex carries counts of (detached component
/// sizes, root component size); a child is merged by either cutting the
/// connecting edge, which detaches the child's root component, or keeping
/// it, which adds the two root sizes. Children are merged in order of
/// their subtree codes so every run builds the same intermediate maps.
pub fn u_polynomial_tree(tree: &Tree) -> PartitionPolynomial {
    let n = tree.vertex_count();
    let codes = tree.subtree_codes(0);
    let (parent, order) = tree.rooted_order(0);

    let mut children: Vec<Vec<u32>> = vec![Vec::new(); n];
    for v in 0..n as u32 {
        if let Some(p) = parent[v as usize] {
            children[p as usize].push(v);
        }
    }
    for list in &mut children {
        list.sort_by(|&a, &b| codes[a as usize].cmp(&codes[b as usize]).then(a.cmp(&b)));
    }

    let mut states: Vec<Option<SubtreeStates>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut acc: SubtreeStates = BTreeMap::new();
        acc.insert((Vec::new(), 1), 1);
        for &c in &children[v as usize] {
            let child = states[c as usize]
                .take()
                .expect("children are finished first");
            let mut next: SubtreeStates = BTreeMap::new();
            for ((detached_a, root_a), &count_a) in &acc {
                for ((detached_b, root_b), &count_b) in &child {
                    let count = count_a
                        .checked_mul(count_b)
                        .expect("U-polynomial coefficient overflow");
                    let cut = merge_desc(detached_a, detached_b, Some(*root_b));
                    add_count(&mut next, (cut, *root_a), count);
                    let kept = merge_desc(detached_a, detached_b, None);
                    add_count(&mut next, (kept, root_a + root_b), count);
                }
            }
            acc = next;
        }
        states[v as usize] = Some(acc);
    }

    let root = states[0].take().unwrap();
    let mut poly = PartitionPolynomial::new();
    for ((detached, root_size), count) in root {
        let mut parts = detached;
        parts.push(root_size);
        poly.add_term(Partition::from_unsorted(parts), count);
    }
    poly
}

fn add_count(states: &mut SubtreeStates, key: (Vec<u32>, u32), count: i64) {
    let slot = states.entry(key).or_insert(0);
    *slot = slot
        .checked_add(count)
        .expect("U-polynomial coefficient overflow");
}

/// Power-sum expansion of the chromatic symmetric function of a tree:
/// [p_λ] X_T = (−1)^{n − ℓ(λ)} c_λ(T). The result reuses
/// [`PartitionPolynomial`] with x_λ standing for p_λ.
pub fn chromatic_p_expansion(tree: &Tree) -> PartitionPolynomial {
    let n = tree.vertex_count();
    u_polynomial_tree(tree).map_coeffs(|lambda, c| if (n - lambda.len()) % 2 == 1 { -c } else { c })
}
