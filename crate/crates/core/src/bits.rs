//! Fixed-width vertex sets used by the search kernels.
//!
//! `u64` covers graphs on at most 64 vertices, which is every graph the
//! enumerators touch. `Wide` covers the full 512-vertex range.

use std::fmt::Debug;

pub const WIDE_WORDS: usize = 8;
pub const MAX_VERTICES: usize = WIDE_WORDS * 64;

pub trait Bits: Copy + Eq + Debug + Send + Sync {
    fn empty() -> Self;
    /// The set `{0, .., n-1}`.
    fn prefix(n: usize) -> Self;
    fn from_words(words: &[u64]) -> Self;
    fn and(self, other: Self) -> Self;
    fn or(self, other: Self) -> Self;
    fn and_not(self, other: Self) -> Self;
    fn is_empty(self) -> bool;
    fn count(self) -> u32;
    fn first(self) -> Option<usize>;
    fn contains(self, v: usize) -> bool;
    fn with(self, v: usize) -> Self;
    fn without(self, v: usize) -> Self;

    fn iter(self) -> BitIter<Self> {
        BitIter(self)
    }
}

pub struct BitIter<B>(B);

impl<B: Bits> Iterator for BitIter<B> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let v = self.0.first()?;
        self.0 = self.0.without(v);
        Some(v)
    }
}

impl Bits for u64 {
    #[inline]
    fn empty() -> Self {
        0
    }
    #[inline]
    fn prefix(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
    #[inline]
    fn from_words(words: &[u64]) -> Self {
        words.first().copied().unwrap_or(0)
    }
    #[inline]
    fn and(self, other: Self) -> Self {
        self & other
    }
    #[inline]
    fn or(self, other: Self) -> Self {
        self | other
    }
    #[inline]
    fn and_not(self, other: Self) -> Self {
        self & !other
    }
    #[inline]
    fn is_empty(self) -> bool {
        self == 0
    }
    #[inline]
    fn count(self) -> u32 {
        self.count_ones()
    }
    #[inline]
    fn first(self) -> Option<usize> {
        if self == 0 {
            None
        } else {
            Some(self.trailing_zeros() as usize)
        }
    }
    #[inline]
    fn contains(self, v: usize) -> bool {
        (self >> v) & 1 == 1
    }
    #[inline]
    fn with(self, v: usize) -> Self {
        self | (1u64 << v)
    }
    #[inline]
    fn without(self, v: usize) -> Self {
        self & !(1u64 << v)
    }
}

/// A 512-bit vertex set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Wide(pub [u64; WIDE_WORDS]);

impl Bits for Wide {
    fn empty() -> Self {
        Wide([0; WIDE_WORDS])
    }

    fn prefix(n: usize) -> Self {
        let mut w = [0u64; WIDE_WORDS];
        for (i, word) in w.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        Wide(w)
    }

    fn from_words(words: &[u64]) -> Self {
        let mut w = [0u64; WIDE_WORDS];
        w[..words.len()].copy_from_slice(words);
        Wide(w)
    }

    #[inline]
    fn and(self, other: Self) -> Self {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(other.0) {
            *a &= b;
        }
        Wide(w)
    }

    #[inline]
    fn or(self, other: Self) -> Self {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(other.0) {
            *a |= b;
        }
        Wide(w)
    }

    #[inline]
    fn and_not(self, other: Self) -> Self {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(other.0) {
            *a &= !b;
        }
        Wide(w)
    }

    #[inline]
    fn is_empty(self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    fn count(self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    fn first(self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    #[inline]
    fn contains(self, v: usize) -> bool {
        (self.0[v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    fn with(mut self, v: usize) -> Self {
        self.0[v / 64] |= 1u64 << (v % 64);
        self
    }

    #[inline]
    fn without(mut self, v: usize) -> Self {
        self.0[v / 64] &= !(1u64 << (v % 64));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_prefix_and_iteration_agree() {
        for n in [0, 1, 63, 64, 65, 130, 512] {
            let p = Wide::prefix(n);
            assert_eq!(p.count() as usize, n);
            assert_eq!(p.iter().collect::<Vec<_>>(), (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn u64_ops() {
        let s = 0u64.with(3).with(10).with(63);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 10, 63]);
        assert_eq!(s.without(10).count(), 2);
        assert_eq!(u64::prefix(64), u64::MAX);
    }
}
