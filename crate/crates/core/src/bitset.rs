//! Fixed-capacity vertex sets backed by `u64` words.
//!
//! All hot kernels in the crate (clique search, trace computation, pattern
//! backtracking) reduce to word-wise AND/ANDNOT plus popcounts on these sets,
//! so the representation is kept deliberately flat: a capacity and a word
//! vector, with the trailing word always masked to the capacity.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// A set of vertex indices drawn from `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS)
}

impl VertexSet {
    /// Empty set over the ground range `0..nbits`.
    pub fn new(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; word_count(nbits)],
        }
    }

    /// Full set `{0, .., nbits-1}`.
    pub fn full(nbits: usize) -> Self {
        let mut s = Self::new(nbits);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.mask_tail();
        s
    }

    /// Builds a set from explicit members.
    pub fn from_iter<I: IntoIterator<Item = usize>>(nbits: usize, members: I) -> Self {
        let mut s = Self::new(nbits);
        for v in members {
            s.insert(v);
        }
        s
    }

    #[inline]
    fn mask_tail(&mut self) {
        let rem = self.nbits % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the ground range this set draws from.
    #[inline]
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.nbits, "index {v} out of range {}", self.nbits);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Number of members (popcount over all words).
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        for w in self.words.iter_mut() {
            *w = 0;
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Members collected ascending.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    #[inline]
    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Removes every member of `other` from `self`.
    #[inline]
    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Drops every member `<= v`.
    pub fn retain_above(&mut self, v: usize) {
        let word = v / WORD_BITS;
        for w in self.words.iter_mut().take(word) {
            *w = 0;
        }
        if word < self.words.len() {
            let keep_from = v % WORD_BITS + 1;
            if keep_from == WORD_BITS {
                self.words[word] = 0;
            } else {
                self.words[word] &= !((1u64 << keep_from) - 1);
            }
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Raw word storage; trailing word is masked to capacity.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Element-list lexicographic order (ascending member lists compared
// entry-wise, shorter prefix first). This is the canonical order used for
// deterministic clique and witness output.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.nbits.cmp(&other.nbits))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_query_remove() {
        let mut s = VertexSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64));
        assert!(!s.contains(63));
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 129]);
    }

    #[test]
    fn full_masks_tail() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.iter().last(), Some(69));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_iter(10, [1, 3, 5, 7]);
        let b = VertexSet::from_iter(10, [3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 5]);
        assert_eq!(a.intersection_len(&b), 2);
        let mut d = a.clone();
        d.subtract(&b);
        assert_eq!(d.to_vec(), vec![1, 7]);
        assert!(VertexSet::from_iter(10, [3, 5]).is_subset_of(&a));
        assert!(!b.is_subset_of(&a));
    }

    #[test]
    fn retain_above_cases() {
        let mut s = VertexSet::from_iter(200, [0, 63, 64, 65, 130, 199]);
        s.retain_above(64);
        assert_eq!(s.to_vec(), vec![65, 130, 199]);
        let mut s = VertexSet::from_iter(10, [0, 1, 2]);
        s.retain_above(9);
        assert!(s.is_empty());
        let mut s = VertexSet::from_iter(128, [63, 64]);
        s.retain_above(63);
        assert_eq!(s.to_vec(), vec![64]);
    }

    #[test]
    fn lexicographic_order() {
        let mk = |v: &[usize]| VertexSet::from_iter(12, v.iter().copied());
        // [0,5] < [1,2]; prefix [0] < [0,1]; [0,1] < [0,7]
        assert!(mk(&[0, 5]) < mk(&[1, 2]));
        assert!(mk(&[0]) < mk(&[0, 1]));
        assert!(mk(&[0, 1]) < mk(&[0, 7]));
        assert_eq!(mk(&[2, 4]).cmp(&mk(&[2, 4])), Ordering::Equal);
    }
}
