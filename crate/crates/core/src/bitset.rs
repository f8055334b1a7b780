//! Dense fixed-length bitset used for membership tables and sumsets.

use std::fmt;

const WORD: usize = 64;

/// A fixed-length set of integers in `[0, len)`, one bit per integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    /// Sets bit `i`. Indices outside the table are ignored.
    #[inline]
    pub fn insert(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] |= 1 << (i % WORD);
        }
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    /// Sets every bit in `[lo, hi)`, clipped to the table.
    pub fn insert_range(&mut self, lo: usize, hi: usize) {
        for i in lo..hi.min(self.len) {
            self.insert(i);
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of set bits in `[lo, hi)`.
    pub fn count_range(&self, lo: usize, hi: usize) -> usize {
        (lo..hi.min(self.len)).filter(|&i| self.contains(i)).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Returns a copy shifted up by `k`: bit `i` moves to `i + k`, bits
    /// falling off the end are dropped.
    pub fn shifted_up(&self, k: usize) -> BitSet {
        let mut out = BitSet::new(self.len);
        let (ws, bs) = (k / WORD, k % WORD);
        for dst in ws..self.words.len() {
            let src = dst - ws;
            let mut v = self.words[src] << bs;
            if bs != 0 && src > 0 {
                v |= self.words[src - 1] >> (WORD - bs);
            }
            out.words[dst] = v;
        }
        out.trim();
        out
    }

    /// `self |= other`. Both tables must have the same length.
    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    /// `self |= other << k`, without allocating.
    pub fn union_shifted(&mut self, other: &BitSet, k: usize) {
        debug_assert_eq!(self.len, other.len);
        let (ws, bs) = (k / WORD, k % WORD);
        for dst in (ws..self.words.len()).rev() {
            let src = dst - ws;
            let mut v = other.words[src] << bs;
            if bs != 0 && src > 0 {
                v |= other.words[src - 1] >> (WORD - bs);
            }
            self.words[dst] |= v;
        }
        self.trim();
    }

    /// Closes the set under adding `step`: afterwards `x` in the set implies
    /// `x + step` in the set (within the table).
    ///
    /// Uses repeated doubling, so the cost is `log(len / step)` word sweeps.
    pub fn close_under_step(&mut self, step: usize) {
        assert!(step > 0, "closure step must be positive");
        let mut k = step;
        while k < self.len {
            let snapshot = self.clone();
            self.union_shifted(&snapshot, k);
            k = k.saturating_mul(2);
        }
    }

    /// The sumset `self + other`, truncated to a table of length `len`.
    pub fn sumset(&self, other: &BitSet, len: usize) -> BitSet {
        let mut base = BitSet::new(len);
        for i in other.iter().filter(|&i| i < len) {
            base.insert(i);
        }
        let mut out = BitSet::new(len);
        for a in self.iter() {
            if a >= len {
                break;
            }
            out.union_shifted(&base, a);
        }
        out
    }

    fn trim(&mut self) {
        let extra = self.words.len() * WORD - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
