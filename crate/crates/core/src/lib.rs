//! Square centres, overlaps and extremal constructions in binary words.
//!
//! A *square* is a word of the form `uu` with `u` nonempty. A square factor
//! of `w` is identified by the gap position at its midpoint, and `M(w)`
//! counts the distinct positions of `w` that are centres of at least one
//! square. This crate provides:
//!
//! - [`word`]: bit-packed binary words and elementary operations,
//! - [`repetition`]: centres, minimal square roots, frames, overlaps and
//!   the full per-word analysis,
//! - [`thue_morse`]: the Thue–Morse morphism, its fixed point and factors,
//! - [`constructions`]: word families with extremal centre counts,
//! - [`enumerate`]: exhaustive generation of (overlap-free) binary words
//!   with centre statistics,
//! - [`verify`]: batch checks of the structural claims behind the library.

pub mod constructions;
pub mod enumerate;
pub mod error;
mod lce;
pub mod repetition;
pub mod thue_morse;
pub mod verify;
pub mod word;

pub use error::Error;
pub use word::{Position, Word};
