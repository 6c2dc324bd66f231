use std::fmt;
use std::ops::{BitAnd, BitAndAssign};

/// A set of vertex ids backed by a fixed-capacity bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSubset {
    pub fn new(capacity: usize) -> Self {
        VertexSubset {
            capacity,
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    /// The set {0, .., capacity - 1}.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        if capacity % 64 != 0 {
            if let Some(last) = s.words.last_mut() {
                *last = (1u64 << (capacity % 64)) - 1;
            }
        }
        s
    }

    /// Panics if any id is `>= capacity`.
    pub fn from_ids<I: IntoIterator<Item = usize>>(capacity: usize, ids: I) -> Self {
        let mut s = Self::new(capacity);
        for v in ids {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} out of range 0..{}", self.capacity);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.capacity {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// True if `self ∩ other` is nonempty, without allocating.
    #[inline]
    pub fn intersects(&self, other: &VertexSubset) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Popcount of `self ∩ a ∩ b`.
    #[inline]
    pub fn intersection_len3(&self, a: &VertexSubset, b: &VertexSubset) -> usize {
        self.words
            .iter()
            .zip(&a.words)
            .zip(&b.words)
            .map(|((x, y), z)| (x & y & z).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSubset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitAndAssign<&VertexSubset> for VertexSubset {
    fn bitand_assign(&mut self, rhs: &VertexSubset) {
        debug_assert_eq!(self.capacity, rhs.capacity);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a &= b;
        }
    }
}

impl BitAnd for &VertexSubset {
    type Output = VertexSubset;

    fn bitand(self, rhs: &VertexSubset) -> VertexSubset {
        let mut out = self.clone();
        out &= rhs;
        out
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let s = VertexSubset::from_ids(130, [0, 63, 64, 129]);
        assert_eq!(s.len(), 4);
        assert!(s.contains(129) && !s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_respects_capacity() {
        let s = VertexSubset::full(70);
        assert_eq!(s.len(), 70);
        assert!(!s.contains(70));
        assert_eq!(VertexSubset::full(64).len(), 64);
        assert!(VertexSubset::full(0).is_empty());
    }

    #[test]
    fn intersection() {
        let a = VertexSubset::from_ids(10, [1, 2, 3]);
        let b = VertexSubset::from_ids(10, [2, 3, 4]);
        let c = VertexSubset::from_ids(10, [3, 9]);
        assert_eq!((&a & &b).to_vec(), vec![2, 3]);
        assert_eq!(a.intersection_len3(&b, &c), 1);
        assert!(a.intersects(&c));
        assert!(VertexSubset::from_ids(10, [3]).is_subset(&a));
    }

    #[test]
    #[should_panic]
    fn insert_out_of_range_panics() {
        VertexSubset::new(4).insert(4);
    }
}
