//! Caterpillars and their correspondence with compositions.
//!
//! A caterpillar here is a tree whose internal (degree ≥ 2) vertices induce
//! a path with at least two vertices. Stars and paths on at most three
//! vertices are therefore *not* caterpillars.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::composition::Partition;
use crate::composition::{compositions_of, Composition};
use crate::error::CaterpillarError;
use crate::poly::PartitionPolynomial;
use crate::tree::{DisjointSets, Tree};

/// Which end of the spine comes first, relative to vertex labels.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpineOrientation {
    /// The endpoint with the smaller label is `spine[0]`.
    LowEndFirst,
    HighEndFirst,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CaterpillarView {
    spine: Vec<u32>,
    leaf_counts: Vec<u32>,
    orientation: SpineOrientation,
}

impl CaterpillarView {
    /// Spine vertices in path order.
    pub fn spine(&self) -> &[u32] {
        &self.spine
    }

    /// Leaves hanging off each spine vertex.
    pub fn leaf_counts(&self) -> &[u32] {
        &self.leaf_counts
    }

    pub fn orientation(&self) -> SpineOrientation {
        self.orientation
    }

    pub fn is_proper(&self) -> bool {
        self.leaf_counts.iter().all(|&c| c >= 1)
    }

    /// Sizes of the components of T restricted to its leaf edges, in spine
    /// order (`1 + leaf_counts[i]`).
    pub fn block_sizes(&self) -> Composition {
        Composition::new(self.leaf_counts.iter().map(|&c| c + 1).collect())
            .expect("block sizes are positive")
    }
}

/// Spine and leaf counts of `tree`, or why it is not a caterpillar.
///
/// Of the two spine directions, the one with the lexicographically smaller
/// block-size sequence is chosen; on a tie the lower-labelled endpoint
/// comes first.
pub fn caterpillar_view(tree: &Tree) -> Result<CaterpillarView, CaterpillarError> {
    let n = tree.vertex_count();
    if n < 4 {
        return Err(CaterpillarError::NotCaterpillar("fewer than four vertices"));
    }
    let internal: Vec<bool> = (0..n as u32).map(|v| tree.degree(v) >= 2).collect();
    let internal_neighbors = |v: u32| {
        tree.neighbors(v)
            .iter()
            .filter(|&&w| internal[w as usize])
            .count()
    };
    let spine_vertices: Vec<u32> = (0..n as u32).filter(|&v| internal[v as usize]).collect();
    if spine_vertices.len() < 2 {
        return Err(CaterpillarError::NotCaterpillar(
            "internal vertices form a trivial path",
        ));
    }
    if spine_vertices.iter().any(|&v| internal_neighbors(v) > 2) {
        return Err(CaterpillarError::NotCaterpillar(
            "internal vertices do not induce a path",
        ));
    }
    // Internal vertices of a tree induce a subtree, so with maximum
    // internal degree 2 it is a path with exactly two endpoints.
    let ends: Vec<u32> = spine_vertices
        .iter()
        .copied()
        .filter(|&v| internal_neighbors(v) == 1)
        .collect();
    debug_assert_eq!(ends.len(), 2);

    let mut spine = Vec::with_capacity(spine_vertices.len());
    let mut prev = None;
    let mut cur = ends[0];
    loop {
        spine.push(cur);
        let next = tree
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| internal[w as usize] && Some(w) != prev);
        match next {
            Some(w) => {
                prev = Some(cur);
                cur = w;
            }
            None => break,
        }
    }
    let leaf_counts: Vec<u32> = spine
        .iter()
        .map(|&v| (tree.degree(v) - internal_neighbors(v)) as u32)
        .collect();

    let reversed: Vec<u32> = leaf_counts.iter().rev().copied().collect();
    let flip = reversed < leaf_counts;
    let mut view = CaterpillarView {
        spine,
        leaf_counts,
        orientation: SpineOrientation::LowEndFirst,
    };
    if flip {
        view.spine.reverse();
        view.leaf_counts.reverse();
        view.orientation = SpineOrientation::HighEndFirst;
    }
    Ok(view)
}

/// U^L_T(x) = Σ over edge sets A ⊇ L(T) of x_{λ(A)}, by enumerating the
/// 2^{k−1} subsets of the k−1 spine edges and taking component sizes.
pub fn u_restricted(tree: &Tree) -> Result<PartitionPolynomial, CaterpillarError> {
    let view = caterpillar_view(tree)?;
    let on_spine = |v: u32| view.spine.contains(&v);
    let (spine_edges, leaf_edges): (Vec<_>, Vec<_>) = tree
        .edges()
        .iter()
        .copied()
        .partition(|&(u, v)| on_spine(u) && on_spine(v));

    let mut poly = PartitionPolynomial::new();
    for mask in 0u64..1 << spine_edges.len() {
        let mut sets = DisjointSets::new(tree.vertex_count());
        for &(u, v) in &leaf_edges {
            sets.union(u, v);
        }
        for (i, &(u, v)) in spine_edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sets.union(u, v);
            }
        }
        poly.add_term(Partition::from_unsorted(sets.component_sizes()), 1);
    }
    Ok(poly)
}

/// Φ(T): the reverse-class representative of the block sizes of a proper
/// caterpillar.
pub fn phi(tree: &Tree) -> Result<Composition, CaterpillarError> {
    let view = caterpillar_view(tree)?;
    if let Some(i) = view.leaf_counts.iter().position(|&c| c == 0) {
        return Err(CaterpillarError::Improper(i));
    }
    Ok(view.block_sizes().reverse_class_rep())
}

/// Ψ(β): a path v₀…v_{ℓ−1} with β_i − 1 leaves on v_i.
///
/// Spine vertices are labelled `0..ℓ`, leaves follow in spine order.
pub fn psi(beta: &Composition) -> Result<Tree, CaterpillarError> {
    if !beta.is_proper() {
        return Err(CaterpillarError::PartOne(beta.to_string()));
    }
    if beta.len() < 2 {
        return Err(CaterpillarError::SinglePart(beta.to_string()));
    }
    let k = beta.len() as u32;
    let mut edges: Vec<(u32, u32)> = (0..k - 1).map(|i| (i, i + 1)).collect();
    let mut next = k;
    for (i, &part) in beta.parts().iter().enumerate() {
        for _ in 1..part {
            edges.push((i as u32, next));
            next += 1;
        }
    }
    Ok(Tree::from_edges(next as usize, edges).expect("Ψ builds a tree"))
}

/// One proper caterpillar per isomorphism class on `n` vertices, as Ψ of
/// each reverse-class representative among compositions of `n` with parts
/// ≥ 2 and length ≥ 2. Empty for `n < 4`.
pub fn enumerate_proper_caterpillars(n: u32) -> Vec<Tree> {
    proper_caterpillar_compositions(n)
        .iter()
        .map(|beta| psi(beta).expect("parts >= 2 and length >= 2"))
        .collect()
}

/// The compositions behind [`enumerate_proper_caterpillars`], in the same
/// order.
pub fn proper_caterpillar_compositions(n: u32) -> Vec<Composition> {
    if n < 4 {
        return Vec::new();
    }
    compositions_of(n, 2)
        .into_iter()
        .filter(|beta| beta.len() >= 2 && *beta == beta.reverse_class_rep())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpoly::l_polynomial;
    use alloc::vec;

    fn c(p: &[u32]) -> Composition {
        Composition::from_parts(p)
    }

    fn path(n: u32) -> Tree {
        Tree::from_edges(n as usize, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap()
    }

    #[test]
    fn views() {
        let v = caterpillar_view(&path(4)).unwrap();
        assert_eq!(v.leaf_counts(), &[1, 1]);
        assert!(v.is_proper());
        let v = caterpillar_view(&path(5)).unwrap();
        assert_eq!(v.leaf_counts(), &[1, 0, 1]);
        assert_eq!(v.spine().len(), 3);
        assert!(!v.is_proper());
        let star = Tree::from_edges(5, (1..5).map(|i| (0, i)).collect()).unwrap();
        assert!(matches!(
            caterpillar_view(&star),
            Err(CaterpillarError::NotCaterpillar(_))
        ));
        assert!(caterpillar_view(&path(3)).is_err());
        // A spider with three legs of length 2 has a branching spine.
        let spider =
            Tree::from_edges(7, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(caterpillar_view(&spider).is_err());
    }

    #[test]
    fn orientation_prefers_lex_smaller_blocks() {
        let t = psi(&c(&[3, 2])).unwrap();
        let v = caterpillar_view(&t).unwrap();
        assert_eq!(v.block_sizes(), c(&[2, 3]));
    }

    #[test]
    fn restricted_polynomials() {
        assert_eq!(
            u_restricted(&path(4)).unwrap().canonical_string(),
            "1*x[4]+1*x[2.2]"
        );
        assert_eq!(
            u_restricted(&path(5)).unwrap().canonical_string(),
            "1*x[5]+2*x[3.2]+1*x[2.2.1]"
        );
        let t = psi(&c(&[2, 3])).unwrap();
        assert_eq!(
            u_restricted(&t).unwrap().canonical_string(),
            "1*x[5]+1*x[3.2]"
        );
        assert_eq!(u_restricted(&t).unwrap(), l_polynomial(&c(&[2, 3])));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&path(4)).unwrap(), c(&[2, 2]));
        assert_eq!(phi(&psi(&c(&[2, 5, 3])).unwrap()).unwrap(), c(&[2, 5, 3]));
        let t = Tree::from_edges(7, vec![(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (1, 6)]).unwrap();
        assert_eq!(phi(&t).unwrap(), c(&[2, 5]));
        assert_eq!(phi(&path(5)), Err(CaterpillarError::Improper(1)));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi(&c(&[2, 2])).unwrap().canonical_code(),
            path(4).canonical_code()
        );
        let t = psi(&c(&[2, 3])).unwrap();
        assert_eq!(t.vertex_count(), 5);
        assert_eq!(caterpillar_view(&t).unwrap().leaf_counts(), &[1, 2]);
        let t = psi(&c(&[2, 5, 3])).unwrap();
        assert_eq!(t.vertex_count(), 10);
        assert!(caterpillar_view(&t).unwrap().is_proper());
        assert!(matches!(
            psi(&c(&[1, 2])),
            Err(CaterpillarError::PartOne(_))
        ));
        assert!(matches!(
            psi(&c(&[4])),
            Err(CaterpillarError::SinglePart(_))
        ));
    }

    #[test]
    fn leaf_counts_of_psi() {
        assert_eq!(psi(&c(&[2, 3])).unwrap().leaf_count(), 3);
        assert_eq!(psi(&c(&[2, 5, 3])).unwrap().leaf_count(), 7);
    }

    #[test]
    fn caterpillar_counts() {
        assert_eq!(enumerate_proper_caterpillars(4).len(), 1);
        assert_eq!(
            proper_caterpillar_compositions(6),
            [c(&[2, 2, 2]), c(&[2, 4]), c(&[3, 3])]
        );
        assert!(enumerate_proper_caterpillars(3).is_empty());
        for t in enumerate_proper_caterpillars(9) {
            assert!(caterpillar_view(&t).unwrap().is_proper());
        }
    }
}
