//! Fixed-length bit vector with MSB-first word layout.
//!
//! Position `k` (0-based) lives in word `k / 64` at bit `63 - k % 64`, so
//! comparing the word arrays as unsigned integers orders two vectors of the
//! same length exactly like their `0`/`1` strings. Trailing bits of the last
//! word are always zero.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

#[inline]
fn mask_of(k: usize) -> u64 {
    1u64 << (WORD - 1 - k % WORD)
}

impl BitSet {
    pub fn zeros(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = BitSet {
            len,
            words: vec![u64::MAX; len.div_ceil(WORD)],
        };
        b.clear_tail();
        b
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut b = BitSet::zeros(bits.len());
        for (k, &v) in bits.iter().enumerate() {
            if v {
                b.insert(k);
            }
        }
        b
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !((1u64 << (WORD - rem)) - 1);
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, k: usize) -> bool {
        debug_assert!(k < self.len);
        self.words[k / WORD] & mask_of(k) != 0
    }

    #[inline]
    pub fn insert(&mut self, k: usize) {
        debug_assert!(k < self.len);
        self.words[k / WORD] |= mask_of(k);
    }

    #[inline]
    pub fn remove(&mut self, k: usize) {
        debug_assert!(k < self.len);
        self.words[k / WORD] &= !mask_of(k);
    }

    #[inline]
    pub fn set(&mut self, k: usize, value: bool) {
        if value {
            self.insert(k)
        } else {
            self.remove(k)
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    /// Set positions in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let lead = w.leading_zeros() as usize;
                w &= !(1u64 << (WORD - 1 - lead));
                Some(wi * WORD + lead)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |k| self.get(k))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
