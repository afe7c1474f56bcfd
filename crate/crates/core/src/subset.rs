//! Fixed-width subsets of an algebra's universe, stored as one machine word.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::algebra::ElementId;

/// A subset of `{0, .., n-1}` with `n <= 64`.
///
/// The derived `Ord` is the canonical order used for every family of subsets
/// in reports: first by cardinality, then by the numeric value of the bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The whole universe of size `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: ElementId) -> Self {
        Subset(1u64 << x)
    }

    pub fn contains(self, x: ElementId) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: ElementId) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: ElementId) {
        self.0 &= !(1u64 << x);
    }

    #[must_use]
    pub fn with(self, x: ElementId) -> Self {
        Subset(self.0 | 1u64 << x)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to the universe of size `n`.
    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<ElementId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as ElementId)
    }

    /// Members in ascending element order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Every subset of a universe of size `n` (`n <= 20` in practice).
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < 64, "cannot enumerate the power set of 64 elements");
        (0..1u64 << n).map(Subset)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

/// Bitwise complement over all 64 positions; prefer [`Subset::complement`].
impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl std::ops::BitOrAssign for Subset {
    fn bitor_assign(&mut self, rhs: Subset) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAndAssign for Subset {
    fn bitand_assign(&mut self, rhs: Subset) {
        self.0 &= rhs.0;
    }
}

impl FromIterator<ElementId> for Subset {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for Subset {
    type Item = ElementId;
    type IntoIter = SubsetIter;
    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as ElementId;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for SubsetIter {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(Subset::full(3).bits(), 0b111);
        assert_eq!(Subset::full(64).bits(), u64::MAX);
        let s: Subset = [0, 2].into_iter().collect();
        assert_eq!(s.complement(4), [1, 3].into_iter().collect());
    }

    #[test]
    fn canonical_order_is_size_then_bits() {
        let small: Subset = [5, 6].into_iter().collect();
        let big: Subset = [2, 4, 6].into_iter().collect();
        assert!(small < big);
        let a: Subset = [0, 1].into_iter().collect();
        let b: Subset = [0, 2].into_iter().collect();
        assert!(a < b);
    }

    #[test]
    fn iteration_is_ascending() {
        let s: Subset = [63, 0, 17].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 17, 63]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(Subset::EMPTY.first(), None);
    }

    proptest! {
        #[test]
        fn collect_iter_roundtrip(bits in any::<u64>()) {
            let s = Subset::from_bits(bits);
            let back: Subset = s.iter().collect();
            prop_assert_eq!(back, s);
            prop_assert_eq!(s.iter().len(), s.len());
        }

        #[test]
        fn de_morgan(a in any::<u64>(), b in any::<u64>()) {
            let (a, b) = (Subset::from_bits(a), Subset::from_bits(b));
            prop_assert_eq!((a | b).complement(64), a.complement(64) & b.complement(64));
            prop_assert_eq!(a - b, a & b.complement(64));
            prop_assert!((a & b).is_subset_of(a));
        }
    }
}
