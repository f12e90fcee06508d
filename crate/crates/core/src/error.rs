use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input text contained a character other than '0' or '1'.
    /// `index` is the 1-based position of the first offender.
    #[error("illegal symbol {found:?} at character {index}; words contain only '0' and '1'")]
    IllegalSymbol { index: usize, found: char },

    /// A factor request fell outside the word.
    #[error("factor out of range: start {start}, len {len} on a word of length {word_len}")]
    FactorOutOfRange {
        start: usize,
        len: usize,
        word_len: usize,
    },

    /// Tried to delete a suffix longer than the word.
    #[error("cannot drop a suffix of length {k} from a word of length {word_len}")]
    SuffixTooLong { k: usize, word_len: usize },

    /// A gap position outside 1..|w| was supplied.
    #[error("position {position} is not a valid gap position of a word of length {word_len}")]
    InvalidPosition { position: usize, word_len: usize },

    /// A parameter failed a precondition (wrong range, parity, ...).
    #[error("invalid parameter {name}: {message}")]
    InvalidParameter { name: &'static str, message: String },

    /// A sweep asked for more work than the configured resource cap allows.
    #[error("{name} = {value} exceeds the resource cap {cap}; raise the cap to run this sweep")]
    CapExceeded {
        name: &'static str,
        value: u64,
        cap: u64,
    },
}
