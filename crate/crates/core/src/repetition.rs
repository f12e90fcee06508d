//! Squares, centres, frames and overlaps in binary words.
//!
//! A square `uu` sits at gap position `p` of `w` when its root `u` is both
//! a suffix of the length-`p` prefix and a prefix of the rest; `p` is then
//! a *centre*, and `M(w)` counts the distinct centres. A *frame* is a
//! square whose root is unbordered. An *overlap* is a factor `cxcxc` with
//! `c` a single letter and `x` possibly empty.
//!
//! Two independent tiers compute centres: [`centres_bruteforce`] scans
//! symbols position by position with no precomputation, while [`centres`]
//! and everything built on it answer each candidate root through longest
//! common extension queries. The tiers must agree; tests hold them to it.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::lce::Lce;
use crate::word::{Position, Word};

/// A square occurrence: the root `u` of `uu` centred at gap position
/// `centre` of the host word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareOccurrence {
    pub centre: Position,
    pub root: Word,
}

impl SquareOccurrence {
    pub fn root_length(&self) -> usize {
        self.root.len()
    }
}

impl Serialize for SquareOccurrence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SquareOccurrence", 3)?;
        s.serialize_field("centre", &self.centre)?;
        s.serialize_field("root", &self.root)?;
        s.serialize_field("root_length", &self.root.len())?;
        s.end()
    }
}

/// An overlap occurrence `cxcxc`: `start` is the 1-based letter index of
/// the first `c`, `letter` the repeated symbol, `inner` the word `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapOccurrence {
    pub start: usize,
    pub letter: u8,
    pub inner: Word,
}

impl Serialize for OverlapOccurrence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("OverlapOccurrence", 3)?;
        s.serialize_field("start", &self.start)?;
        s.serialize_field("letter", if self.letter == 0 { "0" } else { "1" })?;
        s.serialize_field("inner", &self.inner)?;
        s.end()
    }
}

/// Whether a word starts or ends with one of the four special words, which
/// can occur in an overlap-free word only at that end.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SpecialStatus {
    pub prefix_special_prefix: bool,
    pub suffix_special_suffix: bool,
}

/// Everything the analyzer reports about one word. `bound_lhs`/`bound_rhs`
/// spell out the two sides of `2M(w) <= |w| + 3`; `tight` compares them
/// and is only present for overlap-free words, where the bound applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub word: Word,
    pub length: usize,
    pub overlap_free: bool,
    pub centres: Vec<Position>,
    #[serde(rename = "M")]
    pub m: usize,
    pub minimal_squares: Vec<SquareOccurrence>,
    pub bound_lhs: usize,
    pub bound_rhs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
}

/// Length of the shortest square root centred at `p`, via extension
/// queries against a prepared index.
fn minimal_root_len(lce: &Lce, p: usize) -> Option<usize> {
    let n = lce.len();
    (1..=p.min(n - p)).find(|&l| lce.lce(p - l, p) >= l)
}

/// The square with the shortest root centred at gap position `p`, if any.
/// The shortest root is always unbordered: a border of the root would
/// itself be the root of a smaller square at `p`.
pub fn minimal_square_at(w: &Word, p: usize) -> Result<Option<SquareOccurrence>, Error> {
    let centre = Position::new(p, w.len())?;
    let lce = Lce::new(w);
    Ok(minimal_root_len(&lce, p).map(|l| SquareOccurrence {
        centre,
        root: w.factor(p - l + 1, l).expect("root lies inside w"),
    }))
}

/// All centres of squares, ascending. Production tier.
pub fn centres(w: &Word) -> Vec<Position> {
    let lce = Lce::new(w);
    (1..w.len())
        .filter(|&p| minimal_root_len(&lce, p).is_some())
        .map(Position::new_unchecked)
        .collect()
}

/// `M(w)`, the number of centres of squares.
pub fn count_centres(w: &Word) -> usize {
    let lce = Lce::new(w);
    (1..w.len())
        .filter(|&p| minimal_root_len(&lce, p).is_some())
        .count()
}

/// Minimal square-root length at every gap position, indexed by the
/// position itself (entry 0 unused), or `None` where no square is
/// centred. Lets factor sweeps answer "does a square of root length
/// <= L sit at p?" in constant time per position.
pub(crate) fn minimal_root_lengths(w: &Word) -> Vec<Option<usize>> {
    let n = w.len();
    let lce = Lce::new(w);
    let mut table = vec![None; n];
    for (p, entry) in table.iter_mut().enumerate().skip(1) {
        *entry = minimal_root_len(&lce, p);
    }
    table
}

/// All centres of squares, ascending. Oracle tier: per-position
/// symbol-by-symbol scanning with no shared precomputation.
pub fn centres_bruteforce(w: &Word) -> Vec<Position> {
    let n = w.len();
    (1..n)
        .filter(|&p| (1..=p.min(n - p)).any(|l| (0..l).all(|i| w.bit(p - l + i) == w.bit(p + i))))
        .map(Position::new_unchecked)
        .collect()
}

/// All squares with unbordered roots, ordered by (centre, root_length).
/// Every centre carries at least one frame — the minimal square — so the
/// centre set of the result equals [`centres`].
pub fn frames(w: &Word) -> Vec<SquareOccurrence> {
    let n = w.len();
    let lce = Lce::new(w);
    let mut out = Vec::new();
    for p in 1..n {
        for l in 1..=p.min(n - p) {
            if lce.lce(p - l, p) < l {
                continue;
            }
            // A root of length >= 2 whose ends agree has a one-letter
            // border; skip it without materializing the root.
            if l >= 2 && w.bit(p - l) == w.bit(p - 1) {
                continue;
            }
            let root = w.factor(p - l + 1, l).expect("root lies inside w");
            if l == 1 || root.is_unbordered() {
                out.push(SquareOccurrence {
                    centre: Position::new_unchecked(p),
                    root,
                });
            }
        }
    }
    out
}

fn find_overlap_with(lce: &Lce, w: &Word) -> Option<OverlapOccurrence> {
    let n = w.len();
    for s in 0..n {
        let q_max = (n - s).saturating_sub(1) / 2;
        for q in 1..=q_max {
            if lce.lce(s, s + q) > q {
                return Some(OverlapOccurrence {
                    start: s + 1,
                    letter: w.bit(s),
                    inner: w.factor(s + 2, q - 1).expect("inner lies inside w"),
                });
            }
        }
    }
    None
}

/// The leftmost overlap `cxcxc`, taking the shortest `x` at that start;
/// absent iff the word is overlap-free.
pub fn find_overlap(w: &Word) -> Option<OverlapOccurrence> {
    find_overlap_with(&Lce::new(w), w)
}

pub fn is_overlap_free(w: &Word) -> bool {
    find_overlap(w).is_none()
}

/// Flags for the special prefixes 001001/110110 and suffixes
/// 100100/011011.
pub fn special_status(w: &Word) -> SpecialStatus {
    let begins = |t: &str| w.starts_with(&Word::from_text(t).unwrap());
    let ends = |t: &str| w.ends_with(&Word::from_text(t).unwrap());
    SpecialStatus {
        prefix_special_prefix: begins("001001") || begins("110110"),
        suffix_special_suffix: ends("100100") || ends("011011"),
    }
}

/// Full analysis of one word: centres with their minimal squares,
/// overlap-freeness, and both sides of the centre-count bound.
pub fn analyze(w: &Word) -> AnalysisReport {
    let n = w.len();
    let lce = Lce::new(w);
    let mut centres = Vec::new();
    let mut minimal_squares = Vec::new();
    for p in 1..n {
        if let Some(l) = minimal_root_len(&lce, p) {
            centres.push(Position::new_unchecked(p));
            minimal_squares.push(SquareOccurrence {
                centre: Position::new_unchecked(p),
                root: w.factor(p - l + 1, l).expect("root lies inside w"),
            });
        }
    }
    let overlap_free = find_overlap_with(&lce, w).is_none();
    let m = centres.len();
    AnalysisReport {
        word: w.clone(),
        length: n,
        overlap_free,
        centres,
        m,
        minimal_squares,
        bound_lhs: 2 * m,
        bound_rhs: n + 3,
        tight: overlap_free.then_some(2 * m == n + 3),
    }
}
