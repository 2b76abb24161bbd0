//! Subsets of a ground set of at most 64 elements, stored as a single word.
//!
//! Internally element `i` is bit `i` (0-based). Everything that faces a user
//! (parsing, display, serialization) speaks 1-based indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported ground set.
pub const MAX_GROUND_SET: usize = 64;

/// A subset of `{0, .., n-1}` as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        SubsetMask(1u64 << i)
    }

    /// Builds a set from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SubsetMask(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    /// Builds a set from 1-based indices, the convention used in files and reports.
    ///
    /// Panics on index 0 or on an index above 64.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SubsetMask::from_indices(indices.into_iter().map(|i| {
            assert!((1..=MAX_GROUND_SET).contains(&i), "index {i} outside 1..=64");
            i - 1
        }))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub const fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | (1u64 << i))
    }

    #[inline]
    pub const fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1u64 << i))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    #[inline]
    pub const fn symmetric_difference(self, other: Self) -> Self {
        SubsetMask(self.0 ^ other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    /// Complement within a ground set of size `n`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Ascending 0-based indices.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Ascending 1-based indices.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Renumbers the members of `self ∩ within` by their rank inside `within`
    /// (parallel bit extract). Used to move a set into the ground set of a minor.
    pub fn compress(self, within: SubsetMask) -> SubsetMask {
        let mut out = 0u64;
        for (pos, i) in within.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << pos;
            }
        }
        SubsetMask(out)
    }

    /// Inverse of [`compress`](Self::compress): bit `j` of `self` becomes the
    /// `j`-th smallest member of `within`.
    pub fn expand(self, within: SubsetMask) -> SubsetMask {
        let mut out = 0u64;
        for (pos, i) in within.iter().enumerate() {
            if self.contains(pos) {
                out |= 1 << i;
            }
        }
        SubsetMask(out)
    }

    /// Lexicographic order on the ascending index lists (`{1,2,3} < {1,2,4} < {1,3}`).
    pub fn lex_cmp(self, other: Self) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// All subsets of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `self` with exactly `size` elements.
    pub fn subsets_of_size(self, size: usize) -> impl Iterator<Item = SubsetMask> {
        self.subsets().filter(move |s| s.len() == size)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SubsetMask {
    /// `{1,2,3}` with 1-based indices, `∅` for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|i| i + 1))
    }
}

impl<'de> Deserialize<'de> for SubsetMask {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        let mut bits = 0u64;
        for i in indices {
            if !(1..=MAX_GROUND_SET).contains(&i) {
                return Err(serde::de::Error::custom(format!(
                    "element index {i} outside 1..=64"
                )));
            }
            bits |= 1 << (i - 1);
        }
        Ok(SubsetMask(bits))
    }
}

/// Iterator over the members of a [`SubsetMask`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
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

impl ExactSizeIterator for Elements {}

/// Iterator over all subsets of a mask (the usual `(s - u) & u` walk).
#[derive(Clone)]
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let current = self.next?;
        self.next = if current == self.universe {
            None
        } else {
            Some(current.wrapping_sub(self.universe) & self.universe)
        };
        Some(SubsetMask(current))
    }
}
