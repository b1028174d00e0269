//! Dense vertex sets backed by 64-bit words.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A set of vertex indices with bitset semantics.
///
/// Trailing zero words are never stored, so two sets with the same members
/// compare equal regardless of how they were built. Sets of up to 128
/// vertices live inline.
///
/// The [`Ord`] implementation is the witness tie-breaking order used across
/// the crate: of two distinct sets, the one containing the smallest element
/// of their symmetric difference is the smaller. On sets of equal size this
/// is plain lexicographic order of the ascending member lists.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The full range `[0, n)`.
    pub fn full(n: usize) -> Self {
        Self::range(0, n)
    }

    /// The half-open range `[start, end)`.
    pub fn range(start: usize, end: usize) -> Self {
        let mut set = Self::new();
        if start >= end {
            return set;
        }
        set.grow_to(end - 1);
        for (i, word) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = lo + WORD;
            let a = start.max(lo);
            let b = end.min(hi);
            if a < b {
                let width = b - a;
                let mask = if width == WORD { u64::MAX } else { ((1u64 << width) - 1) << (a - lo) };
                *word |= mask;
            }
        }
        set.trim();
        set
    }

    pub fn from_u64(mask: u64) -> Self {
        Self::from_u128(mask as u128)
    }

    pub fn from_u128(mask: u128) -> Self {
        let mut set = Self { words: SmallVec::from_slice(&[mask as u64, (mask >> 64) as u64]) };
        set.trim();
        set
    }

    /// Lowest 64 members as a mask, or `None` if any member is 64 or above.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn to_u128(&self) -> Option<u128> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0] as u128),
            2 => Some(self.words[0] as u128 | (self.words[1] as u128) << 64),
            _ => None,
        }
    }

    fn grow_to(&mut self, v: usize) {
        let need = v / WORD + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.grow_to(v);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        match self.words.get_mut(w) {
            Some(word) if *word & (1 << b) != 0 => {
                *word &= !(1 << b);
                self.trim();
                true
            }
            _ => false,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words.get(v / WORD).is_some_and(|w| w & (1 << (v % WORD)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member, if any.
    pub fn last(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - last.leading_zeros() as usize))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() { (self, other) } else { (other, self) };
        let mut out = long.clone();
        for (a, b) in out.words.iter_mut().zip(short.words.iter()) {
            *a |= b;
        }
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Self { words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect() };
        out.trim();
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        out.trim();
        out
    }

    /// `[0, n) \ self`.
    pub fn complement(&self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().enumerate().all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Shifts every member up by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        self.iter().map(|v| v + offset).collect()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.words.len().max(other.words.len());
        for i in 0..len {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = Self::new();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        Ok(members.into_iter().collect())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * WORD + bit)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn range_crosses_word_boundaries() {
        let set = VertexSet::range(60, 130);
        assert_eq!(set.len(), 70);
        assert_eq!(set.first(), Some(60));
        assert_eq!(set.last(), Some(129));
        assert!(VertexSet::range(5, 5).is_empty());
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(64).to_u64(), Some(u64::MAX));
    }

    #[test]
    fn remove_trims_so_equality_is_structural() {
        let mut a = VertexSet::from([3, 100]);
        a.remove(100);
        assert_eq!(a, VertexSet::from([3]));
        assert_eq!(a.to_u64(), Some(8));
    }

    #[test]
    fn order_prefers_smallest_differing_member() {
        assert!(VertexSet::from([0, 2]) < VertexSet::from([1, 2]));
        assert!(VertexSet::from([0, 2]) < VertexSet::from([0]));
        assert!(VertexSet::from([0]) < VertexSet::new());
        assert!(VertexSet::from([1, 70]) < VertexSet::from([1, 71]));
    }

    proptest! {
        #[test]
        fn matches_btreeset_model(xs in proptest::collection::vec(0usize..200, 0..40),
                                  ys in proptest::collection::vec(0usize..200, 0..40)) {
            use std::collections::BTreeSet;
            let (a, b): (VertexSet, VertexSet) = (xs.iter().copied().collect(), ys.iter().copied().collect());
            let (ma, mb): (BTreeSet<usize>, BTreeSet<usize>) = (xs.into_iter().collect(), ys.into_iter().collect());
            prop_assert_eq!(a.to_vec(), ma.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(a.union(&b).to_vec(), ma.union(&mb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).to_vec(), ma.intersection(&mb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).to_vec(), ma.difference(&mb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_disjoint(&b), ma.is_disjoint(&mb));
            prop_assert_eq!(a.is_subset(&b), ma.is_subset(&mb));
            prop_assert_eq!(a.len(), ma.len());
            let mut c = a.clone();
            c.union_with(&b);
            prop_assert_eq!(c, a.union(&b));
        }
    }
}
