//! Factorization of compositions under the ∘ product and symmetry classes.
//!
//! [`irreducible_factorization`] finds factors by parsing β against a
//! short list of candidate right factors read off β's own prefix.
//! [`exhaustive_irreducible_factorizations`] is a slow reference that
//! multiplies every pair of compositions of complementary size; the two
//! share no code beyond [`Composition::circ`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::composition::{compositions_of, Composition};

/// Factors f₁, …, f_k with β = f₁ ∘ f₂ ∘ ⋯ ∘ f_k.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IrreducibleFactorization {
    factors: Vec<Composition>,
}

impl IrreducibleFactorization {
    pub fn factors(&self) -> &[Composition] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Multiplies the factors back together, left to right.
    pub fn recompose(&self) -> Composition {
        recompose(&self.factors)
    }
}

/// Renders as `(2) ∘ (2,3)`.
impl fmt::Display for IrreducibleFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∘ ")?;
            }
            write!(f, "({factor})")?;
        }
        Ok(())
    }
}

pub fn recompose(factors: &[Composition]) -> Composition {
    let mut iter = factors.iter();
    let first = iter.next().expect("at least one factor").clone();
    iter.fold(first, |acc, f| acc.circ(f))
}

/// β ∘ γ is trivial when either side is `(1)`, both have length 1, or both
/// consist only of ones.
pub fn is_trivial_factorization(beta: &Composition, gamma: &Composition) -> bool {
    let one = |c: &Composition| c.parts() == [1];
    one(beta)
        || one(gamma)
        || (beta.len() == 1 && gamma.len() == 1)
        || (beta.is_all_ones() && gamma.is_all_ones())
}

/// If β = δ ∘ γ for the given γ, returns δ.
///
/// β is read left to right as copies of γ. Between copies the boundary part
/// is either γ_m (a new run starts) or γ_m + γ₁ (the copies are
/// near-concatenated); γ₁ ≥ 1 makes the two cases distinguishable, so the
/// parse is deterministic. Run lengths give δ.
pub fn left_quotient(beta: &Composition, gamma: &Composition) -> Option<Composition> {
    let b = beta.parts();
    let g = gamma.parts();
    if !beta.size().is_multiple_of(gamma.size()) {
        return None;
    }
    if g.len() == 1 {
        let unit = g[0];
        if b.iter().any(|&p| p % unit != 0) {
            return None;
        }
        return Composition::new(b.iter().map(|&p| p / unit).collect()).ok();
    }

    let m = g.len();
    let mut runs = Vec::new();
    let mut run = 1u32;
    let mut pos = 0usize;
    let mut start = 0usize;
    loop {
        for &expected in &g[start..m - 1] {
            if b.get(pos) != Some(&expected) {
                return None;
            }
            pos += 1;
        }
        let boundary = *b.get(pos)?;
        pos += 1;
        if boundary == g[m - 1] {
            runs.push(run);
            run = 1;
            start = 0;
            if pos == b.len() {
                break;
            }
        } else if boundary == g[m - 1] + g[0] {
            run += 1;
            start = 1;
        } else {
            return None;
        }
    }
    Composition::new(runs).ok()
}

fn candidate_right_factors(beta: &Composition) -> BTreeSet<Composition> {
    let b = beta.parts();
    let n = beta.size();
    let mut out = BTreeSet::new();

    // Length-one factors (g) with g dividing every part.
    let gcd = b.iter().fold(0u32, |a, &p| gcd(a, p));
    for g in 2..=gcd {
        if gcd % g == 0 {
            out.insert(Composition::from_parts(&[g]));
        }
    }
    // Longer factors: the first copy of γ is either β₁…β_m, or
    // β₁…β_{m−1}(β_m − β₁) when its last part was merged with the next copy.
    for m in 2..=b.len() {
        let mut unmerged = b[..m].to_vec();
        let size: u32 = unmerged.iter().sum();
        if size < n && n.is_multiple_of(size) {
            out.insert(Composition::from_parts(&unmerged));
        }
        if b[m - 1] > b[0] {
            unmerged[m - 1] -= b[0];
            let size = size - b[0];
            if size < n && n.is_multiple_of(size) {
                out.insert(Composition::from_parts(&unmerged));
            }
        }
    }
    out
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every non-trivial way to write β = δ ∘ γ, as `(δ, γ)` pairs.
pub fn nontrivial_splits(beta: &Composition) -> Vec<(Composition, Composition)> {
    candidate_right_factors(beta)
        .into_iter()
        .filter_map(|gamma| {
            let delta = left_quotient(beta, &gamma)?;
            (!is_trivial_factorization(&delta, &gamma)).then_some((delta, gamma))
        })
        .collect()
}

pub fn admits_only_trivial_factorizations(beta: &Composition) -> bool {
    nontrivial_splits(beta).is_empty()
}

/// The unique irreducible factorization of β.
///
/// Peels off the smallest non-trivial right factor (which is necessarily
/// irreducible), recurses on the left quotient, then fuses adjacent pairs
/// of length-one factors or of all-ones factors, which would otherwise
/// form trivial products.
pub fn irreducible_factorization(beta: &Composition) -> IrreducibleFactorization {
    let mut factors = Vec::new();
    let mut rest = beta.clone();
    loop {
        let smallest = nontrivial_splits(&rest)
            .into_iter()
            .min_by(|a, b| (a.1.size(), &a.1).cmp(&(b.1.size(), &b.1)));
        match smallest {
            Some((delta, gamma)) => {
                factors.push(gamma);
                rest = delta;
            }
            None => {
                factors.push(rest);
                break;
            }
        }
    }
    factors.reverse();
    IrreducibleFactorization {
        factors: fuse_trivial_pairs(factors),
    }
}

fn fuse_trivial_pairs(factors: Vec<Composition>) -> Vec<Composition> {
    let mut out: Vec<Composition> = Vec::with_capacity(factors.len());
    for f in factors {
        if let Some(prev) = out.last_mut() {
            if is_trivial_factorization(prev, &f) {
                *prev = prev.circ(&f);
                continue;
            }
        }
        out.push(f);
    }
    out
}

/// True iff the chain is an irreducible factorization: every factor admits
/// only trivial factorizations and no adjacent pair is trivial.
pub fn is_irreducible_chain(factors: &[Composition]) -> bool {
    !factors.is_empty()
        && factors.iter().all(admits_only_trivial_factorizations)
        && factors
            .windows(2)
            .all(|w| !is_trivial_factorization(&w[0], &w[1]))
}

/// {T₁(f₁) ∘ ⋯ ∘ T_k(f_k) : T_i ∈ {id, reverse}} over the irreducible
/// factors of β.
pub fn sym_class(beta: &Composition) -> BTreeSet<Composition> {
    let factorization = irreducible_factorization(beta);
    let factors = factorization.factors();
    let flippable: Vec<usize> = (0..factors.len())
        .filter(|&i| !factors[i].is_palindrome())
        .collect();
    assert!(flippable.len() < 32, "too many non-palindromic factors");
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << flippable.len() {
        let mut chosen = factors.to_vec();
        for (bit, &i) in flippable.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                chosen[i] = chosen[i].reverse();
            }
        }
        out.insert(recompose(&chosen));
    }
    out
}

/// Reference search: every irreducible factorization of β, found by
/// multiplying all pairs of compositions whose sizes multiply to |β|.
///
/// Exponential in |β|; intended for |β| up to about 14.
pub fn exhaustive_irreducible_factorizations(beta: &Composition) -> Vec<Vec<Composition>> {
    let mut memo = ExhaustiveSearch::default();
    let mut found: Vec<Vec<Composition>> = memo
        .all_chains(beta)
        .into_iter()
        .filter(|chain| {
            chain.iter().all(|f| memo.only_trivial(f))
                && chain
                    .windows(2)
                    .all(|w| !is_trivial_factorization(&w[0], &w[1]))
        })
        .collect();
    found.sort();
    found.dedup();
    found
}

#[derive(Default)]
struct ExhaustiveSearch {
    // All (δ, γ) with δ ∘ γ = key, |δ|, |γ| >= 2.
    products: BTreeMap<Composition, Vec<(Composition, Composition)>>,
    sizes_done: BTreeSet<u32>,
}

impl ExhaustiveSearch {
    fn pairs(&mut self, beta: &Composition) -> Vec<(Composition, Composition)> {
        let n = beta.size();
        if self.sizes_done.insert(n) {
            for d in 2..=n / 2 {
                if !n.is_multiple_of(d) {
                    continue;
                }
                let lefts = compositions_of(d, 1);
                let rights = compositions_of(n / d, 1);
                for delta in &lefts {
                    for gamma in &rights {
                        self.products
                            .entry(delta.circ(gamma))
                            .or_default()
                            .push((delta.clone(), gamma.clone()));
                    }
                }
            }
        }
        self.products.get(beta).cloned().unwrap_or_default()
    }

    fn only_trivial(&mut self, f: &Composition) -> bool {
        self.pairs(f)
            .iter()
            .all(|(d, g)| is_trivial_factorization(d, g))
    }

    fn all_chains(&mut self, beta: &Composition) -> Vec<Vec<Composition>> {
        let mut chains = alloc::vec![alloc::vec![beta.clone()]];
        for (delta, gamma) in self.pairs(beta) {
            for mut chain in self.all_chains(&delta) {
                chain.push(gamma.clone());
                chains.push(chain);
            }
        }
        chains
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(p: &[u32]) -> Composition {
        Composition::from_parts(p)
    }

    #[test]
    fn trivial_factorization_examples() {
        assert!(is_trivial_factorization(&c(&[1]), &c(&[2, 3])));
        assert!(is_trivial_factorization(&c(&[2]), &c(&[3])));
        assert!(is_trivial_factorization(&c(&[1, 1]), &c(&[1, 1, 1])));
        assert!(!is_trivial_factorization(&c(&[2]), &c(&[1, 2])));
    }

    #[test]
    fn left_quotients() {
        assert_eq!(left_quotient(&c(&[2, 5, 3]), &c(&[2, 3])), Some(c(&[2])));
        assert_eq!(
            left_quotient(&c(&[1, 2, 1, 3, 2]), &c(&[1, 2])),
            Some(c(&[1, 2]))
        );
        assert_eq!(left_quotient(&c(&[4, 6]), &c(&[2])), Some(c(&[2, 3])));
        assert_eq!(left_quotient(&c(&[2, 3]), &c(&[2])), None);
        assert_eq!(left_quotient(&c(&[2, 4, 3]), &c(&[2, 3])), None);
    }

    #[test]
    fn factorization_examples() {
        let f = irreducible_factorization(&c(&[1, 2, 1, 3, 2]));
        assert_eq!(f.factors(), &[c(&[1, 2]), c(&[1, 2])]);
        let f = irreducible_factorization(&c(&[2, 5, 3]));
        assert_eq!(f.factors(), &[c(&[2]), c(&[2, 3])]);
        assert_eq!(alloc::format!("{f}"), "(2) ∘ (2,3)");
        let f = irreducible_factorization(&c(&[2, 3]));
        assert_eq!(f.factors(), &[c(&[2, 3])]);
    }

    #[test]
    fn fuses_length_one_and_all_ones_runs() {
        // (6,6) = (1,1)∘(6); peeling (2) first would leave (3) next to it.
        let f = irreducible_factorization(&c(&[6, 6]));
        assert_eq!(f.factors(), &[c(&[1, 1]), c(&[6])]);
        let f = irreducible_factorization(&c(&[2, 2, 2, 2]));
        assert_eq!(f.factors(), &[c(&[1, 1, 1, 1]), c(&[2])]);
        let f = irreducible_factorization(&c(&[12]));
        assert_eq!(f.factors(), &[c(&[12])]);
    }

    #[test]
    fn matches_exhaustive_search_on_examples() {
        for beta in [
            c(&[1, 2, 1, 3, 2]),
            c(&[2, 5, 3]),
            c(&[2, 3]),
            c(&[6, 6]),
            c(&[1, 2, 1]),
        ] {
            let all = exhaustive_irreducible_factorizations(&beta);
            let ours = irreducible_factorization(&beta);
            assert_eq!(all, vec![ours.factors().to_vec()], "{beta}");
            assert!(is_irreducible_chain(ours.factors()));
        }
    }

    #[test]
    fn sym_class_examples() {
        let s: Vec<_> = sym_class(&c(&[1, 2, 1, 3, 2])).into_iter().collect();
        assert_eq!(
            s,
            [
                c(&[1, 2, 1, 3, 2]),
                c(&[1, 3, 2, 1, 2]),
                c(&[2, 1, 2, 3, 1]),
                c(&[2, 3, 1, 2, 1])
            ]
        );
        let s: Vec<_> = sym_class(&c(&[1, 2, 1])).into_iter().collect();
        assert_eq!(s, [c(&[1, 2, 1])]);
        let s: Vec<_> = sym_class(&c(&[2, 3])).into_iter().collect();
        assert_eq!(s, [c(&[2, 3]), c(&[3, 2])]);
    }
}
