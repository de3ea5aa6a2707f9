//! Sparse integer polynomials in the monomials x_λ.
//!
//! Terms are kept in a `BTreeMap` so iteration order is deterministic. The
//! canonical text form lists terms by partition in descending lexicographic
//! order as `c*x[a.b.c]` joined by `+`, e.g. `1*x[4]+1*x[2.2]`; that
//! string is the key used for collision detection.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::String;
use core::fmt::{self, Write};

use crate::composition::Partition;

/// Σ c_λ x_λ with non-zero `i64` coefficients.
///
/// Coefficient arithmetic is checked; overflow panics rather than wraps.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PartitionPolynomial {
    terms: BTreeMap<Partition, i64>,
}

impl PartitionPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                let sum = slot
                    .get()
                    .checked_add(coeff)
                    .expect("partition polynomial coefficient overflow");
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// [x_λ]P, zero when absent.
    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Terms in descending partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> i64 {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .expect("partition polynomial coefficient overflow")
    }

    /// Size of the partitions if they all agree.
    pub fn degree(&self) -> Option<u32> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// The evaluation x₁ = 0: drops every term whose partition has a part 1.
    pub fn drop_part_one(&self) -> Self {
        self.filter(|lambda| !lambda.contains_part(1))
    }

    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> Self {
        PartitionPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, &c)| (p.clone(), c))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Partition, i64) -> i64) -> Self {
        let mut out = PartitionPolynomial::new();
        for (p, &c) in &self.terms {
            out.add_term(p.clone(), f(p, c));
        }
        out
    }

    pub fn canonical_string(&self) -> String {
        let mut s = String::new();
        write!(s, "{self}").unwrap();
        s
    }
}

impl FromIterator<(Partition, i64)> for PartitionPolynomial {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        let mut poly = PartitionPolynomial::new();
        for (p, c) in iter {
            poly.add_term(p, c);
        }
        poly
    }
}

/// The canonical text form; `0` for the zero polynomial.
impl fmt::Display for PartitionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}*x[{p}]")?;
        }
        Ok(())
    }
}

/// Σ c · x_λ · (y−1)^j for a simple graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GraphUPolynomial {
    // Keyed by (partition, y exponent).
    terms: BTreeMap<(Partition, u32), i64>,
}

impl GraphUPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, lambda: Partition, y_exponent: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry((lambda, y_exponent)) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                let sum = slot
                    .get()
                    .checked_add(coeff)
                    .expect("graph polynomial coefficient overflow");
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition, y_exponent: u32) -> i64 {
        self.terms
            .get(&(lambda.clone(), y_exponent))
            .copied()
            .unwrap_or(0)
    }

    /// Terms sorted by partition descending, then y exponent ascending.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u32, i64)> {
        let mut v: alloc::vec::Vec<_> = self.terms.iter().map(|((p, j), &c)| (p, *j, c)).collect();
        v.sort_by(|a, b| b.0.cmp(a.0).then(a.1.cmp(&b.1)));
        v.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_y_exponent(&self) -> u32 {
        self.terms.keys().map(|(_, j)| *j).max().unwrap_or(0)
    }

    /// Terms with y exponent zero, as a partition polynomial.
    pub fn x_part(&self) -> PartitionPolynomial {
        self.terms
            .iter()
            .filter(|((_, j), _)| *j == 0)
            .map(|((p, _), &c)| (p.clone(), c))
            .collect()
    }

    pub fn canonical_string(&self) -> String {
        let mut s = String::new();
        write!(s, "{self}").unwrap();
        s
    }
}

/// Like [`PartitionPolynomial`]'s form, with a `*(y-1)^j` suffix on terms
/// where `j > 0`.
impl fmt::Display for GraphUPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, j, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}*x[{p}]")?;
            if j > 0 {
                write!(f, "*(y-1)^{j}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_text() {
        let poly: PartitionPolynomial = [(p(&[2, 2]), 1), (p(&[4]), 1)].into_iter().collect();
        assert_eq!(poly.canonical_string(), "1*x[4]+1*x[2.2]");
        assert_eq!(PartitionPolynomial::new().canonical_string(), "0");
    }

    #[test]
    fn zero_coefficients_are_removed() {
        let mut poly = PartitionPolynomial::new();
        poly.add_term(p(&[3]), 2);
        poly.add_term(p(&[3]), -2);
        poly.add_term(p(&[2, 1]), 0);
        assert!(poly.is_empty());

        let mut g = GraphUPolynomial::new();
        g.add_term(p(&[3]), 1, 1);
        g.add_term(p(&[3]), 0, 1);
        g.add_term(p(&[3]), 1, -1);
        assert_eq!(g.len(), 1);
        assert_eq!(g.coeff(&p(&[3]), 0), 1);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_loud() {
        let mut poly = PartitionPolynomial::new();
        poly.add_term(p(&[1]), i64::MAX);
        poly.add_term(p(&[1]), 1);
    }

    #[test]
    fn graph_text_and_x_part() {
        let mut g = GraphUPolynomial::new();
        g.add_term(p(&[1, 1, 1]), 0, 1);
        g.add_term(p(&[2, 1]), 0, 3);
        g.add_term(p(&[3]), 0, 3);
        g.add_term(p(&[3]), 1, 1);
        assert_eq!(
            g.canonical_string(),
            "3*x[3]+1*x[3]*(y-1)^1+3*x[2.1]+1*x[1.1.1]"
        );
        assert_eq!(g.x_part().canonical_string(), "3*x[3]+3*x[2.1]+1*x[1.1.1]");
        assert_eq!(g.max_y_exponent(), 1);
    }

    #[test]
    fn drop_part_one_and_mass() {
        let poly: PartitionPolynomial = vec![(p(&[2, 1]), 2), (p(&[3]), 1), (p(&[1, 1, 1]), 1)]
            .into_iter()
            .collect();
        assert_eq!(poly.mass(), 4);
        assert_eq!(poly.degree(), Some(3));
        assert_eq!(poly.drop_part_one().canonical_string(), "1*x[3]");
    }
}
