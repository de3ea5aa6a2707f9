//! Free (unrooted, unlabeled) trees by level sequences.
//!
//! Implements the Wright–Richmond–Odlyzko–McKay generator: rooted trees
//! are walked in the Beyer–Hedetniemi successor order, restricted to level
//! sequences rooted at a center, jumping over runs of non-canonical
//! sequences. Each isomorphism class is produced once.

use alloc::vec::Vec;

use crate::error::TreeError;
use crate::tree::Tree;

/// Largest order accepted by [`enumerate_free_trees`].
pub const MAX_FREE_TREE_ORDER: u32 = 20;

/// Numbers of free trees on 1..=20 vertices.
pub const FREE_TREE_COUNTS: [u64; 20] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955,
    823065,
];

pub fn enumerate_free_trees(n: u32) -> Result<FreeTrees, TreeError> {
    if n == 0 {
        return Err(TreeError::NoVertices);
    }
    if n > MAX_FREE_TREE_ORDER {
        return Err(TreeError::OrderTooLarge {
            requested: n,
            cap: MAX_FREE_TREE_ORDER,
        });
    }
    let pending = if n == 1 {
        Pending::SingleVertex
    } else {
        // The path, rooted at its center.
        let n = n as usize;
        let layout: Vec<u32> = (0..=(n / 2) as u32)
            .chain(1..n.div_ceil(2) as u32)
            .collect();
        Pending::Candidate(layout)
    };
    Ok(FreeTrees { pending })
}

enum Pending {
    SingleVertex,
    Candidate(Vec<u32>),
    Done,
}

/// Iterator over level sequences of free trees; see
/// [`enumerate_free_trees`].
pub struct FreeTrees {
    pending: Pending,
}

impl FreeTrees {
    /// The next level sequence (root at level 0, pre-order).
    pub fn next_level_sequence(&mut self) -> Option<Vec<u32>> {
        match core::mem::replace(&mut self.pending, Pending::Done) {
            Pending::Done => None,
            Pending::SingleVertex => Some(alloc::vec![0]),
            Pending::Candidate(candidate) => {
                let layout = next_free_tree(candidate)?;
                if let Some(next) = next_rooted_tree(&layout, None) {
                    self.pending = Pending::Candidate(next);
                }
                Some(layout)
            }
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.next_level_sequence()
            .map(|seq| tree_from_level_sequence(&seq))
    }
}

/// The tree whose pre-order depth sequence is `levels`.
pub fn tree_from_level_sequence(levels: &[u32]) -> Tree {
    if levels.len() == 1 {
        return Tree::single_vertex();
    }
    // stack[d] = most recent vertex at depth d
    let mut stack: Vec<u32> = Vec::new();
    let mut edges = Vec::with_capacity(levels.len() - 1);
    for (v, &level) in levels.iter().enumerate() {
        stack.truncate(level as usize);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v as u32));
        }
        stack.push(v as u32);
    }
    Tree::from_edges(levels.len(), edges).expect("level sequences describe trees")
}

// Beyer–Hedetniemi successor; `p` overrides the position that is advanced.
fn next_rooted_tree(pred: &[u32], p: Option<usize>) -> Option<Vec<u32>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

// Splits off the first subtree of the root: (that subtree with levels
// shifted up by one, the remaining tree).
fn split_tree(layout: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = Vec::with_capacity(layout.len() - m + 1);
    rest.push(0);
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

// Returns `candidate` if it is a canonical center-rooted sequence,
// otherwise jumps to the next one.
fn next_free_tree(candidate: Vec<u32>) -> Option<Vec<u32>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut jumped = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&jumped);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = jumped.len();
        let suffix = (height + 1) as usize;
        for (offset, level) in (1..=height + 1).enumerate() {
            jumped[len - suffix + offset] = level;
        }
    }
    Some(jumped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn counts_up_to_twelve() {
        for n in 1..=12u32 {
            let trees: Vec<Tree> = enumerate_free_trees(n).unwrap().collect();
            assert_eq!(
                trees.len() as u64,
                FREE_TREE_COUNTS[n as usize - 1],
                "n = {n}"
            );
            let codes: BTreeSet<_> = trees.iter().map(Tree::canonical_code).collect();
            assert_eq!(codes.len(), trees.len(), "duplicates at n = {n}");
            assert!(trees.iter().all(|t| t.vertex_count() == n as usize));
        }
    }

    #[test]
    fn four_vertices_are_path_and_star() {
        let trees: Vec<Tree> = enumerate_free_trees(4).unwrap().collect();
        let leaves: BTreeSet<usize> = trees.iter().map(Tree::leaf_count).collect();
        assert_eq!(leaves, [2, 3].into_iter().collect());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_free_trees(MAX_FREE_TREE_ORDER + 1),
            Err(TreeError::OrderTooLarge { .. })
        ));
        assert!(enumerate_free_trees(0).is_err());
    }

    #[test]
    fn level_sequence_decoding() {
        let t = tree_from_level_sequence(&[0, 1, 2, 1, 2]);
        assert_eq!(t.edges(), &[(0, 1), (1, 2), (0, 3), (3, 4)]);
    }
}
