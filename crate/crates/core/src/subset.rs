use std::fmt;

use serde::{Serialize, Serializer};

/// A set of positive-root indices, stored as a 128-bit mask.
///
/// Root indices are the stable positions in a [`crate::RootTable`]. Every
/// finite type this crate enumerates has at most 128 positive roots.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSubset(u128);

impl RootSubset {
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        RootSubset(0)
    }

    pub const fn from_bits(bits: u128) -> Self {
        RootSubset(bits)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            RootSubset(u128::MAX)
        } else {
            RootSubset((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        RootSubset(1u128 << i)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::CAPACITY && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RootSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RootSubset) -> RootSubset {
        RootSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSubset) -> RootSubset {
        RootSubset(self.0 & other.0)
    }

    pub fn difference(self, other: RootSubset) -> RootSubset {
        RootSubset(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: RootSubset) -> RootSubset {
        RootSubset(self.0 ^ other.0)
    }

    /// Complement inside `0..n`.
    pub fn complement(self, n: usize) -> RootSubset {
        RootSubset(!self.0).intersection(RootSubset::full(n))
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl FromIterator<usize> for RootSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSubset::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for RootSubset {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serializes as the sorted list of root indices.
impl Serialize for RootSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_set_ops() {
        let a: RootSubset = [0, 2, 5].into_iter().collect();
        let b: RootSubset = [2, 3].into_iter().collect();
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 5]);
        assert_eq!(a.complement(6).to_vec(), vec![1, 3, 4]);
        assert!(RootSubset::empty().is_subset(a));
        assert_eq!(RootSubset::full(128).len(), 128);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[0,2,5]");
    }

    proptest! {
        #[test]
        fn iter_collect_round_trip(bits in any::<u128>()) {
            let s = RootSubset::from_bits(bits);
            let back: RootSubset = s.iter().collect();
            prop_assert_eq!(back, s);
            prop_assert_eq!(s.iter().len(), s.len());
        }
    }
}
