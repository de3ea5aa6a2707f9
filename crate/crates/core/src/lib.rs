//! Compositions, partition-indexed polynomials and caterpillar trees.
//!
//! The crate covers:
//!
//! * the algebra of integer compositions: reversal, (near-)concatenation,
//!   the ∘ product, coarsenings, irreducible factorization and symmetry
//!   classes ([`composition`], [`factor`]);
//! * the composition-lattice polynomial L(β) and brute-force L-classes
//!   ([`lpoly`]);
//! * U-polynomials of simple graphs and trees ([`upoly`]);
//! * caterpillars, the restricted U^L-polynomial and the maps Φ/Ψ between
//!   proper caterpillars and compositions ([`caterpillar`]);
//! * free-tree enumeration ([`free_trees`]) and tree isomorphism codes
//!   ([`tree`]);
//! * the separating-coefficient construction for Ψ(α∘γ) vs Ψ(β∘γ)
//!   ([`witness`]).
//!
//! Everything is pure and `no_std` (it needs `alloc`).

#![no_std]

extern crate alloc;

pub mod caterpillar;
pub mod composition;
pub mod error;
pub mod factor;
pub mod free_trees;
pub mod lpoly;
pub mod poly;
pub mod tree;
pub mod upoly;
pub mod witness;

pub use caterpillar::{
    caterpillar_view, enumerate_proper_caterpillars, phi, proper_caterpillar_compositions, psi,
    u_restricted, CaterpillarView, SpineOrientation,
};
pub use composition::{
    compositions_of, enumerate_compositions, first_difference_index, lex_less, Composition,
    Partition,
};
pub use error::{CaterpillarError, CompositionError, TreeError, WitnessError};
pub use factor::{
    irreducible_factorization, is_trivial_factorization, sym_class, IrreducibleFactorization,
};
pub use free_trees::{enumerate_free_trees, FREE_TREE_COUNTS, MAX_FREE_TREE_ORDER};
pub use lpoly::{is_l_unique, l_class_bruteforce, l_polynomial};
pub use poly::{GraphUPolynomial, PartitionPolynomial};
pub use tree::{CanonicalCode, SimpleGraph, Tree};
pub use upoly::{chromatic_p_expansion, u_polynomial_bruteforce, u_polynomial_tree};
pub use witness::{normalize_triple, witness_theorem, WitnessData};
