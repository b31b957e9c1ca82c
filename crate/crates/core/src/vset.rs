//! Fixed-width bit-vector vertex sets.
//!
//! `VertexSet` is the currency every other module trades in: subgraphs,
//! separators, components, memo keys. The width is fixed per solver instance
//! (vertex count is frozen after preprocessing), so all the hot set algebra
//! is plain word-parallel bit operations.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices `0..n`, stored as a bit vector.
///
/// Iteration order is ascending vertex index; this is a determinism contract
/// relied on throughout the solver.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Box<[u64]>,
}

impl VertexSet {
    /// The empty set over the universe `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0u64; word_count(n)].into_boxed_slice(),
        }
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![!0u64; word_count(n)];
        if !n.is_multiple_of(WORD_BITS) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % WORD_BITS)) - 1;
            }
        }
        VertexSet {
            words: words.into_boxed_slice(),
        }
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = Self::empty(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    /// Number of vertices in the set.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    #[inline]
    pub fn subtract(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest vertex in the set, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Removes and returns the smallest vertex.
    pub fn pop_first(&mut self) -> Option<usize> {
        let v = self.first()?;
        self.remove(v);
        Some(v)
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order: width first, then numeric value of the bit pattern (vertex 0
/// is the least-significant bit). Used only for deterministic tie-breaking.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
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

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
