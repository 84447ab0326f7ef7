//! Bit-packed vertex sets.
//!
//! A [`VertexSet`] is a subset of the vertices `0..n` of some graph, stored
//! as machine words so that boundary degrees reduce to `AND` + popcount.
//! Sets of up to 64 vertices fit in a single word; larger universes spill
//! into additional words transparently.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

const WORD_BITS: usize = 64;

/// Number of words needed for a universe of `n` vertices.
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS).max(1)
}

/// Error raised when a vertex index does not fit the universe of a set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("vertex {vertex} out of range for universe of size {n}")]
pub struct VertexOutOfRange {
    pub vertex: usize,
    pub n: usize,
}

/// A subset of the vertices `0..n`.
///
/// The universe size `n` is part of the value: binary operations require
/// both operands to share it, and `complement` is taken with respect to it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    /// The full vertex set `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in 0..s.words.len() {
            s.words[w] = !0;
        }
        s.mask_tail();
        s
    }

    /// Builds a set from explicit indices, rejecting out-of-range vertices.
    pub fn from_indices(
        n: usize,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, VertexOutOfRange> {
        let mut s = Self::empty(n);
        for v in indices {
            if v >= n {
                return Err(VertexOutOfRange { vertex: v, n });
            }
            s.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        }
        Ok(s)
    }

    fn mask_tail(&mut self) {
        let used = self.n % WORD_BITS;
        if self.n == 0 {
            for w in &mut self.words {
                *w = 0;
            }
        } else if used != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << used) - 1;
        }
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    /// Number of vertices in the set.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Inserts `v`. Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for universe {}", self.n);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    /// Removes `v`. Panics if `v` is outside the universe.
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for universe {}", self.n);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    /// Iterates the members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            BitIter { word: w }.map(move |b| base + b)
        })
    }

    /// The members as a sorted `Vec`.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "vertex sets from different universes ({} vs {})",
            self.n, other.n
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn complement(&self) -> Self {
        let words = self.words.iter().map(|w| !w).collect();
        let mut s = VertexSet { n: self.n, words };
        s.mask_tail();
        s
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Lexicographic comparison of the ascending index sequences.
    ///
    /// This is the tie-breaking order used by the exact solvers:
    /// `{0, 3} < {1, 2}` and `{0} < {0, 5}`.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let mut s = VertexSet::empty(10);
        s.insert(0);
        s.insert(7);
        s.insert(9);
        assert!(s.contains(7));
        assert!(!s.contains(3));
        assert_eq!(s.indices(), vec![0, 7, 9]);
        assert_eq!(s.len(), 3);
        s.remove(7);
        assert_eq!(s.indices(), vec![0, 9]);
    }

    #[test]
    fn wide_universe_crosses_word_boundaries() {
        let s = VertexSet::from_indices(130, [0, 63, 64, 127, 129]).unwrap();
        assert_eq!(s.indices(), vec![0, 63, 64, 127, 129]);
        assert_eq!(s.complement().len(), 125);
        assert_eq!(s.complement().complement(), s);
    }

    #[test]
    fn from_indices_rejects_out_of_range() {
        let err = VertexSet::from_indices(4, [1, 4]).unwrap_err();
        assert_eq!(err, VertexOutOfRange { vertex: 4, n: 4 });
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_indices(6, [0, 1, 2]).unwrap();
        let b = VertexSet::from_indices(6, [2, 3]).unwrap();
        assert_eq!(a.union(&b).indices(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).indices(), vec![2]);
        assert_eq!(a.difference(&b).indices(), vec![0, 1]);
        assert!(!a.is_disjoint(&b));
        assert!(a.intersection(&b).is_subset_of(&a));
        assert_eq!(VertexSet::full(6).len(), 6);
    }

    #[test]
    fn lex_order_compares_index_sequences() {
        let a = VertexSet::from_indices(8, [0, 3]).unwrap();
        let b = VertexSet::from_indices(8, [1, 2]).unwrap();
        let c = VertexSet::from_indices(8, [0, 3, 5]).unwrap();
        assert_eq!(a.cmp_lex(&b), Ordering::Less);
        assert_eq!(a.cmp_lex(&c), Ordering::Less);
        assert_eq!(a.cmp_lex(&a), Ordering::Equal);
    }
}
