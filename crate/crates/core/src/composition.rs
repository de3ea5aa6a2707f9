//! Integer compositions and partitions.
//!
//! A [`Composition`] is a non-empty word over the positive integers. Its
//! derived `Ord` is the lexicographic order in which a proper prefix sorts
//! before any extension, which is exactly the strict order used by
//! [`lex_less`].

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::CompositionError;

/// An ordered, non-empty list of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition(Vec<u32>);

/// A weakly decreasing composition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::Empty);
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(CompositionError::ZeroPart { index: pos });
        }
        Ok(Composition(parts))
    }

    /// Builds a composition from parts already known to be valid.
    ///
    /// Panics if `parts` is empty or contains a zero.
    pub fn from_parts(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("invalid composition literal")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of parts, ℓ(β).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; compositions are non-empty.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sum of the parts, |β|.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn last(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    /// Every part is at least 2.
    pub fn is_proper(&self) -> bool {
        self.0.iter().all(|&p| p >= 2)
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// The prefix β₁…β_k. Panics unless `1 <= k <= len`.
    pub fn prefix(&self, k: usize) -> Composition {
        assert!(k >= 1 && k <= self.len(), "prefix length out of range");
        Composition(self.0[..k].to_vec())
    }

    pub fn reverse(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.reverse();
        Composition(parts)
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Canonical representative of the reverse-class {β, reverse(β)}: the
    /// lexicographically smaller of the two.
    pub fn reverse_class_rep(&self) -> Composition {
        let rev = self.reverse();
        if rev < *self {
            rev
        } else {
            self.clone()
        }
    }

    /// Concatenation α·β.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Near-concatenation α⊙β: the last part of α and the first part of β
    /// are added together.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        let mut parts = Vec::with_capacity(self.len() + other.len() - 1);
        parts.extend_from_slice(&self.0);
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    /// The `i`-fold near-concatenation α⊙α⊙…⊙α.
    pub fn odot_power(&self, i: u32) -> Result<Composition, CompositionError> {
        if i == 0 {
            return Err(CompositionError::ZeroExponent);
        }
        let mut result = self.clone();
        for _ in 1..i {
            result = result.near_concat(self);
        }
        Ok(result)
    }

    /// `self ∘ alpha` = α^{⊙β₁} · α^{⊙β₂} ⋯ α^{⊙β_k} where β = `self`.
    ///
    /// The left operand supplies the exponents and the right operand is
    /// the repeated block, so `(2).circ(&(2,3))` is `(2,5,3)` while
    /// `(2,3).circ(&(2))` is `(4,6)`.
    pub fn circ(&self, alpha: &Composition) -> Composition {
        let mut parts = Vec::new();
        for &exponent in &self.0 {
            let block = alpha.odot_power(exponent).expect("parts are positive");
            parts.extend_from_slice(&block.0);
        }
        Composition(parts)
    }

    /// |γ| − ℓ(γ); the number of leaves of the caterpillar built from a
    /// proper composition.
    pub fn leaf_functional(&self) -> u32 {
        self.size() - self.len() as u32
    }

    /// Parts sorted into weakly decreasing order.
    pub fn partition_type(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// All coarsenings, one per subset of the ℓ−1 internal gaps.
    pub fn coarsenings(&self) -> Coarsenings<'_> {
        assert!(self.len() <= 64, "more than 63 gaps");
        Coarsenings {
            parts: &self.0,
            next_mask: 0,
            end: 1u128 << (self.len() - 1),
        }
    }

    /// The coarsening selected by `mask`: bit `i` set merges parts `i` and
    /// `i + 1` (0-based).
    pub fn coarsening(&self, mask: u64) -> Composition {
        Composition(merge_by_mask(&self.0, mask))
    }

    /// True iff `self` arises from `finer` by merging consecutive runs.
    pub fn is_coarsening_of(&self, finer: &Composition) -> bool {
        if self.size() != finer.size() {
            return false;
        }
        // Every prefix sum of the coarser composition must be a prefix sum
        // of the finer one.
        let mut fine = finer.0.iter();
        let mut fine_sum = 0u32;
        let mut coarse_sum = 0u32;
        for &part in &self.0 {
            coarse_sum += part;
            while fine_sum < coarse_sum {
                fine_sum += fine.next().expect("sizes agree");
            }
            if fine_sum != coarse_sum {
                return false;
            }
        }
        true
    }
}

fn merge_by_mask(parts: &[u32], mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(parts.len());
    let mut acc = parts[0];
    for (gap, &part) in parts[1..].iter().enumerate() {
        if mask >> gap & 1 == 1 {
            acc += part;
        } else {
            out.push(acc);
            acc = part;
        }
    }
    out.push(acc);
    out
}

/// Iterator over coarsenings in increasing gap-mask order.
pub struct Coarsenings<'a> {
    parts: &'a [u32],
    next_mask: u128,
    end: u128,
}

impl Iterator for Coarsenings<'_> {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.next_mask >= self.end {
            return None;
        }
        let mask = self.next_mask as u64;
        self.next_mask += 1;
        Some(Composition(merge_by_mask(self.parts, mask)))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next_mask) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Coarsenings<'_> {}

/// Strict lexicographic order. Errors when `a == b`.
pub fn lex_less(a: &Composition, b: &Composition) -> Result<bool, CompositionError> {
    if a == b {
        return Err(CompositionError::EqualOperands);
    }
    Ok(a < b)
}

/// The 1-based index of the first position where `a` and `b` differ.
///
/// When one composition is a proper prefix of the other the result is
/// `len(shorter) + 1`.
pub fn first_difference_index(a: &Composition, b: &Composition) -> Result<usize, CompositionError> {
    if a == b {
        return Err(CompositionError::EqualOperands);
    }
    let common = a.0.iter().zip(&b.0).take_while(|(x, y)| x == y).count();
    Ok(common + 1)
}

/// Compositions of `n` with every part at least `min_part`, in ascending
/// lexicographic order.
///
/// `(4, 1)` yields `1,1,1,1`, `1,1,2`, `1,2,1`, `1,3`, `2,1,1`, `2,2`,
/// `3,1`, `4`. Errors when `n == 0`, `min_part == 0` or `n < min_part`.
pub fn enumerate_compositions(n: u32, min_part: u32) -> Result<Compositions, CompositionError> {
    if n == 0 || min_part == 0 {
        return Err(CompositionError::BadEnumeration { n, min_part });
    }
    if n < min_part {
        return Err(CompositionError::BadEnumeration { n, min_part });
    }
    let mut first = Vec::new();
    fill_lex_min(&mut first, n, min_part);
    Ok(Compositions {
        current: Some(first),
        min_part,
    })
}

/// Like [`enumerate_compositions`] but returns an empty sequence instead of
/// an error when `n < min_part`.
pub fn compositions_of(n: u32, min_part: u32) -> Vec<Composition> {
    match enumerate_compositions(n, min_part) {
        Ok(it) => it.collect(),
        Err(_) => Vec::new(),
    }
}

// Appends the lex-smallest composition of `s` with parts >= m.
fn fill_lex_min(parts: &mut Vec<u32>, mut s: u32, m: u32) {
    while s >= 2 * m {
        parts.push(m);
        s -= m;
    }
    if s > 0 {
        parts.push(s);
    }
}

/// Lexicographic successor iterator; see [`enumerate_compositions`].
pub struct Compositions {
    current: Option<Vec<u32>>,
    min_part: u32,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.current.take()?;
        let m = self.min_part;
        if current.len() >= 2 {
            // Keep everything before the second-to-last part; grow that part
            // by the least amount that leaves a valid (or empty) remainder.
            let mut next = current.clone();
            let suffix = next.pop().unwrap();
            let last = next.last_mut().unwrap();
            if suffix > m {
                *last += 1;
                fill_lex_min(&mut next, suffix - 1, m);
            } else {
                *last += suffix;
            }
            self.current = Some(next);
        }
        Some(Composition(current))
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        Composition::new(parts.clone())?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CompositionError::NotPartition);
        }
        Ok(Partition(parts))
    }

    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn contains_part(&self, part: u32) -> bool {
        self.0.contains(&part)
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, parts: &[u32], sep: &str) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Renders as `2,5,3`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0, ",")
    }
}

/// Renders as `5.3.1`, the form used inside polynomial monomials.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0, ".")
    }
}

/// Parses `2,5,3`, tolerating whitespace and one pair of surrounding
/// brackets or parentheses.
impl FromStr for Composition {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut body = s.trim();
        for (open, close) in [('(', ')'), ('[', ']')] {
            if body.starts_with(open) && body.ends_with(close) && body.len() >= 2 {
                body = &body[1..body.len() - 1];
                break;
            }
        }
        if body.trim().is_empty() {
            return Err(CompositionError::Empty);
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let part: u32 = token
                .parse()
                .map_err(|_| CompositionError::BadToken(token.into()))?;
            parts.push(part);
        }
        Composition::new(parts)
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
    fn reverse_examples() {
        assert_eq!(c(&[1, 2, 3]).reverse(), c(&[3, 2, 1]));
        assert_eq!(c(&[2, 2]).reverse(), c(&[2, 2]));
        assert_eq!(c(&[5]).reverse(), c(&[5]));
    }

    #[test]
    fn palindromes() {
        assert!(c(&[1, 2, 1]).is_palindrome());
        assert!(!c(&[1, 2]).is_palindrome());
        assert!(c(&[7]).is_palindrome());
    }

    #[test]
    fn reverse_class_rep_examples() {
        assert_eq!(c(&[3, 2]).reverse_class_rep(), c(&[2, 3]));
        assert_eq!(c(&[2, 3]).reverse_class_rep(), c(&[2, 3]));
        assert_eq!(c(&[1, 2, 1]).reverse_class_rep(), c(&[1, 2, 1]));
    }

    #[test]
    fn concatenations() {
        assert_eq!(c(&[1, 2]).concat(&c(&[3, 1])), c(&[1, 2, 3, 1]));
        assert_eq!(c(&[5]).concat(&c(&[5])), c(&[5, 5]));
        assert_eq!(c(&[2]).concat(&c(&[1, 1])), c(&[2, 1, 1]));
        assert_eq!(c(&[1, 2]).near_concat(&c(&[3, 1])), c(&[1, 5, 1]));
        assert_eq!(c(&[2]).near_concat(&c(&[3])), c(&[5]));
        assert_eq!(c(&[2, 3]).near_concat(&c(&[2, 3])), c(&[2, 5, 3]));
    }

    #[test]
    fn odot_powers() {
        assert_eq!(c(&[2, 3]).odot_power(2).unwrap(), c(&[2, 5, 3]));
        assert_eq!(c(&[2, 3]).odot_power(3).unwrap(), c(&[2, 5, 5, 3]));
        assert_eq!(c(&[4]).odot_power(1).unwrap(), c(&[4]));
        assert_eq!(c(&[4]).odot_power(0), Err(CompositionError::ZeroExponent));
    }

    #[test]
    fn circ_examples() {
        assert_eq!(c(&[1, 2]).circ(&c(&[1, 2])), c(&[1, 2, 1, 3, 2]));
        assert_eq!(c(&[2]).circ(&c(&[2, 3])), c(&[2, 5, 3]));
        assert_eq!(c(&[1, 1]).circ(&c(&[2, 3])), c(&[2, 3, 2, 3]));
        assert_eq!(c(&[2, 3]).circ(&c(&[2])), c(&[4, 6]));
    }

    #[test]
    fn coarsening_examples() {
        let got: Vec<_> = c(&[1, 1, 2]).coarsenings().collect();
        assert_eq!(got, vec![c(&[1, 1, 2]), c(&[2, 2]), c(&[1, 3]), c(&[4])]);
        assert_eq!(c(&[5]).coarsenings().collect::<Vec<_>>(), vec![c(&[5])]);
        assert_eq!(
            c(&[2, 2]).coarsenings().collect::<Vec<_>>(),
            vec![c(&[2, 2]), c(&[4])]
        );
    }

    #[test]
    fn is_coarsening_examples() {
        assert!(c(&[3, 2]).is_coarsening_of(&c(&[1, 2, 2])));
        assert!(!c(&[2, 3]).is_coarsening_of(&c(&[1, 2, 2])));
        assert!(c(&[1, 4]).is_coarsening_of(&c(&[1, 4])));
        assert!(!c(&[4]).is_coarsening_of(&c(&[1, 4])));
    }

    #[test]
    fn partition_types() {
        assert_eq!(c(&[1, 3, 2]).partition_type().parts(), &[3, 2, 1]);
        assert_eq!(c(&[2, 2]).partition_type().parts(), &[2, 2]);
        assert_eq!(c(&[1, 5, 1, 3]).partition_type().parts(), &[5, 3, 1, 1]);
    }

    #[test]
    fn lex_order() {
        assert_eq!(lex_less(&c(&[2, 3]), &c(&[3, 2])), Ok(true));
        assert_eq!(lex_less(&c(&[1, 2]), &c(&[1, 2, 5])), Ok(true));
        assert_eq!(lex_less(&c(&[3, 2]), &c(&[2, 3])), Ok(false));
        assert_eq!(
            lex_less(&c(&[3]), &c(&[3])),
            Err(CompositionError::EqualOperands)
        );
    }

    #[test]
    fn first_difference() {
        assert_eq!(first_difference_index(&c(&[1, 1]), &c(&[2])), Ok(1));
        assert_eq!(
            first_difference_index(&c(&[2, 3, 2]), &c(&[2, 3, 5])),
            Ok(3)
        );
        assert_eq!(first_difference_index(&c(&[2, 3]), &c(&[2, 3, 1])), Ok(3));
        assert!(first_difference_index(&c(&[2]), &c(&[2])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(compositions_of(4, 1).len(), 8);
        let six: Vec<_> = enumerate_compositions(6, 2).unwrap().collect();
        assert_eq!(
            six,
            vec![c(&[2, 2, 2]), c(&[2, 4]), c(&[3, 3]), c(&[4, 2]), c(&[6])]
        );
        assert!(compositions_of(1, 2).is_empty());
        assert!(enumerate_compositions(1, 2).is_err());
        assert!(enumerate_compositions(0, 1).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for n in 1..=10 {
            let all = compositions_of(n, 1);
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn leaf_functional_examples() {
        assert_eq!(c(&[2, 3]).leaf_functional(), 3);
        assert_eq!(c(&[1, 1, 1]).leaf_functional(), 0);
        assert_eq!(c(&[2, 5, 3]).leaf_functional(), 7);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,5,3".parse::<Composition>().unwrap(), c(&[2, 5, 3]));
        assert_eq!(
            " ( 2, 5 ,3 ) ".parse::<Composition>().unwrap(),
            c(&[2, 5, 3])
        );
        assert_eq!("[7]".parse::<Composition>().unwrap(), c(&[7]));
        assert!("".parse::<Composition>().is_err());
        assert!("2,0".parse::<Composition>().is_err());
        assert!("2,,3".parse::<Composition>().is_err());
        assert!("a".parse::<Composition>().is_err());
        assert_eq!(alloc::format!("{}", c(&[2, 5, 3])), "2,5,3");
        assert_eq!(
            alloc::format!("{}", c(&[1, 5, 3]).partition_type()),
            "5.3.1"
        );
    }

    #[test]
    fn rejects_invalid() {
        assert_eq!(Composition::new(vec![]), Err(CompositionError::Empty));
        assert_eq!(
            Composition::new(vec![1, 0]),
            Err(CompositionError::ZeroPart { index: 1 })
        );
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(CompositionError::NotPartition)
        );
    }
}
