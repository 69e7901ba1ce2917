//! Fixed-width packed bit sets.
//!
//! Every subset in this crate (object sets, attribute sets, subsets of an
//! algebra carrier, open sets of a topology) is a [`BitSet`] of a fixed
//! width. All set operations are word sweeps; the enumeration cores iterate
//! them over up to 2^20 candidates, so this type stays allocation-light and
//! branch-free where it counts.

use std::fmt;

const WORD_BITS: usize = 64;

fn word_count(width: usize) -> usize {
    width.div_ceil(WORD_BITS)
}

/// A subset of `{0, .., width-1}` stored as packed 64-bit words.
///
/// The total order (`Ord`) compares sets numerically with element `i` as bit
/// `i`; it is the canonical enumeration order used everywhere downstream.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    width: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(width: usize) -> Self {
        BitSet {
            width,
            words: vec![0; word_count(width)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut set = Self::empty(width);
        for (i, w) in set.words.iter_mut().enumerate() {
            let hi = (width - i * WORD_BITS).min(WORD_BITS);
            *w = if hi == WORD_BITS { !0 } else { (1u64 << hi) - 1 };
        }
        set
    }

    pub fn singleton(width: usize, index: usize) -> Self {
        let mut set = Self::empty(width);
        set.insert(index);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut set = Self::empty(width);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Interprets the low `width` bits of `mask` as a set; `width <= 64`.
    pub fn from_mask(width: usize, mask: u64) -> Self {
        assert!(width <= WORD_BITS, "mask constructor limited to width 64");
        let mut set = Self::empty(width);
        if width > 0 {
            debug_assert_eq!(mask & !Self::low_mask(width), 0);
            set.words[0] = mask;
        }
        set
    }

    fn low_mask(width: usize) -> u64 {
        if width >= WORD_BITS {
            !0
        } else {
            (1u64 << width) - 1
        }
    }

    /// The packed value of a set of width at most 64.
    pub fn mask(&self) -> u64 {
        assert!(self.width <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, index: usize) -> bool {
        assert!(index < self.width, "bit {index} out of width {}", self.width);
        self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.width, "bit {index} out of width {}", self.width);
        self.words[index / WORD_BITS] |= 1 << (index % WORD_BITS);
    }

    pub fn remove(&mut self, index: usize) {
        assert!(index < self.width, "bit {index} out of width {}", self.width);
        self.words[index / WORD_BITS] &= !(1 << (index % WORD_BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.width, other.width, "bit set width mismatch");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check(other);
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check(other);
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check(other);
        self.zip(other, |a, b| a & !b)
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        BitSet {
            width: self.width,
            words,
        }
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|&w| !w).collect();
        if let Some(last) = words.last_mut() {
            let used = self.width - (self.words.len() - 1) * WORD_BITS;
            *last &= Self::low_mask(used);
        }
        BitSet {
            width: self.width,
            words,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).any(|(&a, &b)| a & b != 0)
    }

    /// Iterates set members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * WORD_BITS + bit)
                }
            })
        })
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
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
