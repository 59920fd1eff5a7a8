//! Dense fixed-width membership sets.
//!
//! Every subset handled by this crate (ideals, multiplicative sets, sets of
//! spectrum points, open sets of a topology) lives over a universe
//! `0..len` of dense indices, so a word vector is all we need.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    /// Empty subset of `0..len`.
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// The whole universe `0..len`.
    pub fn full(len: usize) -> Self {
        let mut set = BitSet::new(len);
        for w in 0..set.words.len() {
            set.words[w] = !0;
        }
        set.trim();
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut set = BitSet::new(len);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn singleton(len: usize, index: usize) -> Self {
        BitSet::from_indices(len, [index])
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    /// Panics if `i` is outside the universe.
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} outside universe of size {}",
            self.len
        );
        let (w, b) = (i / WORD, i % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * WORD + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &BitSet, f: impl Fn(u64, u64) -> u64) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        BitSet {
            len: self.len,
            words,
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> BitSet {
        let mut out = BitSet {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0)
    }
}

/// Canonical order: by cardinality, then lexicographically on the membership
/// vector read from index 0 upward (absent < present).
impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.count().cmp(&other.count()))
            .then_with(|| {
                for (&a, &b) in self.words.iter().zip(&other.words) {
                    if a != b {
                        let low = (a ^ b).trailing_zeros();
                        return if a & (1 << low) != 0 {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_respects_width() {
        for len in [1, 5, 63, 64, 65, 130] {
            let s = BitSet::full(len);
            assert_eq!(s.count(), len);
            assert!(s.complement().is_empty());
        }
    }

    #[test]
    fn canonical_order_is_cardinality_first() {
        let a = BitSet::from_indices(4, [3]);
        let b = BitSet::from_indices(4, [0, 1]);
        assert!(a < b);
        // equal size: the set missing the lowest differing index sorts first
        let c = BitSet::from_indices(4, [0, 3]);
        let d = BitSet::from_indices(4, [1, 2]);
        assert!(d < c);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_vec_model(
            len in 1usize..150,
            xs in proptest::collection::vec(0usize..150, 0..40),
            ys in proptest::collection::vec(0usize..150, 0..40),
        ) {
            let a = BitSet::from_indices(len, xs.iter().copied().filter(|&x| x < len));
            let b = BitSet::from_indices(len, ys.iter().copied().filter(|&y| y < len));
            for i in 0..len {
                prop_assert_eq!(a.union(&b).contains(i), a.contains(i) || b.contains(i));
                prop_assert_eq!(a.intersection(&b).contains(i), a.contains(i) && b.contains(i));
                prop_assert_eq!(a.complement().contains(i), !a.contains(i));
            }
            prop_assert_eq!(a.is_subset(&b), a.difference(&b).is_empty());
            prop_assert_eq!(a.iter().count(), a.count());
        }
    }
}
