//! The Thue–Morse morphism μ (0 ↦ 01, 1 ↦ 10), its fixed point
//! t = 0110100110010110…, positioned factors of t, and the α_n family:
//! α_n is the factor of t of length 3·2ⁿ starting at letter index 5.

use crate::error::Error;
use crate::word::Word;

/// Letterwise image under μ; the result has twice the length.
pub fn mu(w: &Word) -> Word {
    let mut out = Word::empty();
    for s in w.symbols() {
        // Images encoded least significant bit first: 01 -> 0b10, 10 -> 0b01.
        out.append_bits(if s == 0 { 0b10 } else { 0b01 }, 2);
    }
    out
}

/// The prefix of t of length `len`, grown by doubling: each step appends
/// the complement, which agrees with one more iteration of μ.
pub fn tm_prefix(len: usize) -> Word {
    if len == 0 {
        return Word::empty();
    }
    let mut w = Word::from_symbols([0]);
    while w.len() < len {
        w = w.concat(&w.complement());
    }
    w.factor(1, len).expect("prefix grew past len")
}

/// The factor of t of length `len` beginning at 1-based letter index
/// `start`.
pub fn tm_factor(start: usize, len: usize) -> Result<Word, Error> {
    if start < 1 {
        return Err(Error::InvalidParameter {
            name: "start",
            message: "letter indices of t begin at 1".into(),
        });
    }
    let end = start.checked_add(len).ok_or(Error::InvalidParameter {
        name: "len",
        message: "factor end overflows".into(),
    })?;
    tm_prefix(end - 1).factor(start, len)
}

/// α_n, the factor of t of length 3·2ⁿ starting at letter index 5;
/// requires `n >= 1`.
pub fn alpha(n: u32) -> Result<Word, Error> {
    if n < 1 {
        return Err(Error::InvalidParameter {
            name: "n",
            message: "alpha is defined for n >= 1".into(),
        });
    }
    if n > usize::BITS - 2 {
        return Err(Error::InvalidParameter {
            name: "n",
            message: "3 * 2^n overflows".into(),
        });
    }
    tm_factor(5, 3usize << n)
}
