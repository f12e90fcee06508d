//! Immutable binary words and the elementary operations everything else
//! builds on: factors, borders, reversal, complement, conjugacy, suffix
//! deletion.
//!
//! Words are bit-packed, 64 symbols per limb, least significant bit first.
//! All public contracts are stated on symbol sequences; the text codec
//! (`from_text` / `to_text`, ASCII '0'/'1') fixes the observable behaviour.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

const LIMB_BITS: usize = 64;

#[inline]
fn limbs_for(len: usize) -> usize {
    len.div_ceil(LIMB_BITS)
}

/// Low `count` bits set, `count <= 64`.
#[inline]
pub(crate) fn mask(count: usize) -> u64 {
    debug_assert!(count <= 64);
    if count >= 64 {
        !0
    } else {
        (1u64 << count) - 1
    }
}

/// A finite word over the alphabet {0,1}.
///
/// Value semantics: two words are equal iff their symbol sequences are.
/// Ordering is lexicographic with 0 < 1 and a proper prefix ordered first.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    len: usize,
    limbs: Vec<u64>,
}

impl Word {
    /// The empty word ε.
    pub fn empty() -> Self {
        Self::default()
    }

    fn with_capacity(len: usize) -> Self {
        Word {
            len: 0,
            limbs: Vec::with_capacity(limbs_for(len)),
        }
    }

    /// `count` copies of `symbol` (0 or 1).
    pub fn repeat(symbol: u8, count: usize) -> Self {
        assert!(symbol <= 1, "symbols are 0 or 1");
        let mut limbs = vec![if symbol == 0 { 0 } else { !0 }; limbs_for(count)];
        if symbol == 1 {
            if let Some(last) = limbs.last_mut() {
                *last &= mask(count - (limbs_for(count) - 1) * LIMB_BITS);
            }
        }
        Word { len: count, limbs }
    }

    /// A word of `len <= 64` symbols read from the low bits of `bits`,
    /// least significant bit first.
    pub(crate) fn from_limb(bits: u64, len: usize) -> Self {
        debug_assert!(len <= LIMB_BITS);
        if len == 0 {
            return Word::empty();
        }
        Word {
            len,
            limbs: vec![bits & mask(len)],
        }
    }

    /// Builds a word from explicit symbols; every symbol must be 0 or 1.
    pub fn from_symbols<I: IntoIterator<Item = u8>>(symbols: I) -> Self {
        let mut w = Word::empty();
        for s in symbols {
            assert!(s <= 1, "symbols are 0 or 1");
            w.push(s);
        }
        w
    }

    /// Parses ASCII '0'/'1' text. Rejects anything else, reporting the
    /// 1-based index of the first illegal character.
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut w = Word::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => {
                    return Err(Error::IllegalSymbol {
                        index: i + 1,
                        found: c,
                    })
                }
            }
        }
        Ok(w)
    }

    /// Inverse of `from_text`.
    pub fn to_text(&self) -> String {
        self.symbols()
            .map(|s| if s == 0 { '0' } else { '1' })
            .collect()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Symbol at 0-based index `i`, if in range.
    #[inline]
    pub fn get(&self, i: usize) -> Option<u8> {
        (i < self.len).then(|| self.bit(i))
    }

    /// Unchecked 0-based symbol access.
    #[inline]
    pub(crate) fn bit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        ((self.limbs[i / LIMB_BITS] >> (i % LIMB_BITS)) & 1) as u8
    }

    /// First limb, for the single-limb fast paths. Zero for ε.
    #[inline]
    pub(crate) fn first_limb(&self) -> u64 {
        self.limbs.first().copied().unwrap_or(0)
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |i| self.bit(i))
    }

    /// Reads `count <= 64` bits starting at symbol `start`.
    #[inline]
    pub(crate) fn read_bits(&self, start: usize, count: usize) -> u64 {
        debug_assert!(count <= 64 && start + count <= self.len);
        if count == 0 {
            return 0;
        }
        let limb = start / LIMB_BITS;
        let off = start % LIMB_BITS;
        let mut v = self.limbs[limb] >> off;
        if off + count > LIMB_BITS {
            v |= self.limbs[limb + 1] << (LIMB_BITS - off);
        }
        v & mask(count)
    }

    /// Appends the low `count` bits of `value`.
    #[inline]
    pub(crate) fn append_bits(&mut self, value: u64, count: usize) {
        debug_assert!(count <= 64);
        if count == 0 {
            return;
        }
        let value = value & mask(count);
        let off = self.len % LIMB_BITS;
        if off == 0 {
            self.limbs.push(value);
        } else {
            let last = self.limbs.len() - 1;
            self.limbs[last] |= value << off;
            if off + count > LIMB_BITS {
                self.limbs.push(value >> (LIMB_BITS - off));
            }
        }
        self.len += count;
    }

    /// Appends one symbol. Crate-internal: `Word` is immutable to callers.
    #[inline]
    pub(crate) fn push(&mut self, symbol: u8) {
        debug_assert!(symbol <= 1);
        self.append_bits(symbol as u64, 1);
    }

    /// Removes the last symbol, keeping the tail bits canonical (zero).
    #[inline]
    pub(crate) fn pop(&mut self) -> Option<u8> {
        if self.len == 0 {
            return None;
        }
        let s = self.bit(self.len - 1);
        self.len -= 1;
        self.limbs.truncate(limbs_for(self.len));
        if let Some(last) = self.limbs.last_mut() {
            *last &= mask(self.len - (limbs_for(self.len) - 1) * LIMB_BITS);
        }
        Some(s)
    }

    /// Symbols `start .. start+count` (0-based, unchecked precondition).
    pub(crate) fn extract(&self, start: usize, count: usize) -> Word {
        debug_assert!(start + count <= self.len);
        let mut out = Word::with_capacity(count);
        let mut pos = 0;
        while pos < count {
            let c = (count - pos).min(LIMB_BITS);
            out.append_bits(self.read_bits(start + pos, c), c);
            pos += c;
        }
        out
    }

    /// The factor of `count` symbols starting at 1-based letter index `start`.
    pub fn factor(&self, start: usize, count: usize) -> Result<Word, Error> {
        let end = start.checked_sub(1).and_then(|s| s.checked_add(count));
        match end {
            Some(end) if start >= 1 && end <= self.len => Ok(self.extract(start - 1, count)),
            _ => Err(Error::FactorOutOfRange {
                start,
                len: count,
                word_len: self.len,
            }),
        }
    }

    /// The prefix left after deleting a suffix of length `k`.
    pub fn drop_suffix(&self, k: usize) -> Result<Word, Error> {
        if k > self.len {
            return Err(Error::SuffixTooLong {
                k,
                word_len: self.len,
            });
        }
        Ok(self.extract(0, self.len - k))
    }

    /// Every symbol flipped.
    pub fn complement(&self) -> Word {
        let mut limbs: Vec<u64> = self.limbs.iter().map(|&x| !x).collect();
        if let Some(last) = limbs.last_mut() {
            *last &= mask(self.len - (limbs_for(self.len) - 1) * LIMB_BITS);
        }
        Word {
            len: self.len,
            limbs,
        }
    }

    /// Symbols in reverse order.
    pub fn reverse(&self) -> Word {
        let mut out = Word::with_capacity(self.len);
        let mut remaining = self.len;
        while remaining > 0 {
            let c = remaining.min(LIMB_BITS);
            let chunk = self.read_bits(remaining - c, c);
            out.append_bits(chunk.reverse_bits() >> (LIMB_BITS - c), c);
            remaining -= c;
        }
        out
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.limbs
            .reserve(limbs_for(self.len + other.len) - self.limbs.len());
        let mut pos = 0;
        while pos < other.len {
            let c = (other.len - pos).min(LIMB_BITS);
            out.append_bits(other.read_bits(pos, c), c);
            pos += c;
        }
        out
    }

    /// Whether `other` occurs at 0-based offset `start`.
    pub(crate) fn matches_at(&self, start: usize, other: &Word) -> bool {
        if start + other.len > self.len {
            return false;
        }
        let mut pos = 0;
        while pos < other.len {
            let c = (other.len - pos).min(LIMB_BITS);
            if self.read_bits(start + pos, c) != other.read_bits(pos, c) {
                return false;
            }
            pos += c;
        }
        true
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.matches_at(0, prefix)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.len >= suffix.len && self.matches_at(self.len - suffix.len, suffix)
    }

    /// Whether `factor` occurs anywhere in `self`.
    pub fn contains(&self, factor: &Word) -> bool {
        self.find(factor).is_some()
    }

    /// 0-based offset of the leftmost occurrence of `factor`, if any.
    pub fn find(&self, factor: &Word) -> Option<usize> {
        if factor.len > self.len {
            return None;
        }
        (0..=self.len - factor.len).find(|&s| self.matches_at(s, factor))
    }

    /// Shortest nonempty border: a word, different from `self`, that is both
    /// a prefix and a suffix. `None` for unbordered words and `|w| <= 1`.
    pub fn shortest_border(&self) -> Option<Word> {
        let n = self.len;
        if n <= 1 {
            return None;
        }
        let s: Vec<u8> = self.symbols().collect();
        let mut pi = vec![0usize; n];
        for i in 1..n {
            let mut k = pi[i - 1];
            while k > 0 && s[i] != s[k] {
                k = pi[k - 1];
            }
            if s[i] == s[k] {
                k += 1;
            }
            pi[i] = k;
        }
        let mut b = pi[n - 1];
        if b == 0 {
            return None;
        }
        while pi[b - 1] > 0 {
            b = pi[b - 1];
        }
        Some(self.extract(0, b))
    }

    /// True iff the word has no border.
    pub fn is_unbordered(&self) -> bool {
        self.shortest_border().is_none()
    }

    /// The longest word that is a suffix of both `self` and `other`.
    pub fn longest_common_suffix(&self, other: &Word) -> Word {
        let max = self.len.min(other.len);
        let mut k = 0;
        while k < max && self.bit(self.len - 1 - k) == other.bit(other.len - 1 - k) {
            k += 1;
        }
        self.extract(self.len - k, k)
    }

    /// True iff `other` is a cyclic rotation of `self`.
    pub fn is_conjugate(&self, other: &Word) -> bool {
        if self.len != other.len {
            return false;
        }
        if self.len == 0 {
            return true;
        }
        let doubled = self.concat(self);
        (0..self.len).any(|s| doubled.matches_at(s, other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len);
        let mut pos = 0;
        while pos < common {
            let c = (common - pos).min(LIMB_BITS);
            let a = self.read_bits(pos, c);
            let b = other.read_bits(pos, c);
            let x = a ^ b;
            if x != 0 {
                let i = x.trailing_zeros();
                return if (a >> i) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
            pos += c;
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.to_text())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::from_text(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

/// A gap position `p` of a word, `1 <= p < |w|`: the boundary after the
/// prefix of length `p`. A word of length `n` has exactly `n - 1` of them.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position(usize);

impl Position {
    pub fn new(position: usize, word_len: usize) -> Result<Self, Error> {
        if position >= 1 && position < word_len {
            Ok(Position(position))
        } else {
            Err(Error::InvalidPosition { position, word_len })
        }
    }

    #[inline]
    pub(crate) fn new_unchecked(position: usize) -> Self {
        Position(position)
    }

    /// The 1-based gap index.
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Position({})", self.0)
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.0 as u64)
    }
}
