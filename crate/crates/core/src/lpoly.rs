//! The composition-lattice polynomial and L-classes.

use alloc::collections::BTreeSet;

use crate::composition::{compositions_of, Composition};
use crate::poly::PartitionPolynomial;

/// L(β, x) = Σ over coarsenings α ⪰ β of x_{λ(α)}.
pub fn l_polynomial(beta: &Composition) -> PartitionPolynomial {
    let mut poly = PartitionPolynomial::new();
    for alpha in beta.coarsenings() {
        poly.add_term(alpha.partition_type(), 1);
    }
    poly
}

/// The members of `candidates` whose L-polynomial equals `target`.
///
/// Chunks of a candidate list can be scanned independently and the results
/// unioned.
pub fn l_class_among<'a>(
    target: &PartitionPolynomial,
    candidates: impl IntoIterator<Item = &'a Composition>,
) -> BTreeSet<Composition> {
    candidates
        .into_iter()
        .filter(|alpha| l_polynomial(alpha) == *target)
        .cloned()
        .collect()
}

/// All compositions of |β| sharing β's L-polynomial, by scanning every
/// composition of |β|.
///
/// Costs 3^{|β|−1} coarsening visits in total (2^{|β|−1} compositions, each
/// with 2^{ℓ−1} coarsenings), so keep |β| around 16 or below.
pub fn l_class_bruteforce(beta: &Composition) -> BTreeSet<Composition> {
    let target = l_polynomial(beta);
    l_class_among(&target, compositions_of(beta.size(), 1).iter())
}

/// True iff the L-class of β is contained in {β, reverse(β)}.
pub fn is_l_unique(beta: &Composition) -> bool {
    let rev = beta.reverse();
    l_class_bruteforce(beta)
        .iter()
        .all(|alpha| *alpha == *beta || *alpha == rev)
}
