//! Exhaustive enumeration of binary word classes and the statistics of
//! `M` over them.
//!
//! Overlap-free words are generated by depth-first extension: appending a
//! letter can only create an overlap that ends at the new last position,
//! so each step checks just the suffix periods. The all-binary class walks
//! the integers. Large sweeps are partitioned by fixed-length prefixes
//! across worker threads; partial summaries are order-independent and
//! merge associatively, so any worker count reproduces the sequential
//! result exactly.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::repetition::count_centres;
use crate::word::Word;

/// Which words of a given length to sweep.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordClass {
    AllBinary,
    OverlapFree,
}

/// Resource guards for the sweeps, each overridable by the caller.
/// `max_workers` bounds the worker threads used by partitioned sweeps;
/// `None` leaves the choice to the runtime.
#[derive(Clone, Debug)]
pub struct Limits {
    pub all_binary_max: usize,
    pub overlap_free_max: usize,
    pub construction_max: u32,
    pub max_workers: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            all_binary_max: 18,
            overlap_free_max: 30,
            construction_max: 10,
            max_workers: None,
        }
    }
}

/// How many witness words each extreme keeps.
pub const WITNESS_CAP: usize = 16;

/// Distribution of `M` over one class at one length, with the
/// lexicographically least witnesses of both extremes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationSummary {
    pub length: usize,
    pub word_class: WordClass,
    pub total: u64,
    pub m_min: usize,
    pub m_max: usize,
    pub m_histogram: BTreeMap<usize, u64>,
    pub min_witnesses: Vec<Word>,
    pub max_witnesses: Vec<Word>,
}

/// True iff the last letter of `w` completed an overlap: some suffix
/// `cxcxc`, i.e. a suffix of length `2q + 1` with period `q`.
fn suffix_creates_overlap(w: &Word) -> bool {
    let m = w.len();
    for q in 1..=m.saturating_sub(1) / 2 {
        if (m - 1 - 2 * q..=m - 1 - q).all(|i| w.bit(i) == w.bit(i + q)) {
            return true;
        }
    }
    false
}

fn dfs<F: FnMut(&Word)>(w: &mut Word, n: usize, consumer: &mut F) {
    if w.len() == n {
        consumer(w);
        return;
    }
    for s in [0, 1] {
        w.push(s);
        if !suffix_creates_overlap(w) {
            dfs(w, n, consumer);
        }
        w.pop();
    }
}

/// Visits every overlap-free binary word of length `n` exactly once, in
/// lexicographic order, and returns how many there were.
pub fn enumerate_overlap_free<F: FnMut(&Word)>(n: usize, mut consumer: F) -> u64 {
    let mut count = 0;
    let mut buffer = Word::empty();
    dfs(&mut buffer, n, &mut |w| {
        count += 1;
        consumer(w);
    });
    count
}

/// A bounded set of the lexicographically least words seen so far.
/// Insertion order does not matter, which keeps parallel sweeps exact.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct LeastWords(Vec<Word>);

impl LeastWords {
    fn offer(&mut self, w: &Word) {
        if self.0.len() == WITNESS_CAP {
            if *w >= *self.0.last().unwrap() {
                return;
            }
            self.0.pop();
        }
        let at = self.0.binary_search(w).unwrap_or_else(|i| i);
        self.0.insert(at, w.clone());
    }

    fn absorb(&mut self, other: LeastWords) {
        for w in other.0 {
            self.offer(&w);
        }
    }
}

/// An in-progress summary. `observe` is independent of encounter order
/// and `merge` is associative and commutative, so partitioned runs are
/// bit-identical to sequential ones.
#[derive(Clone, Debug, Default)]
struct Partial {
    total: u64,
    hist: BTreeMap<usize, u64>,
    min_m: Option<usize>,
    max_m: Option<usize>,
    min_wit: LeastWords,
    max_wit: LeastWords,
}

impl Partial {
    fn observe(&mut self, w: &Word, m: usize) {
        self.total += 1;
        *self.hist.entry(m).or_insert(0) += 1;
        match self.min_m {
            Some(k) if m > k => {}
            Some(k) if m == k => self.min_wit.offer(w),
            _ => {
                self.min_m = Some(m);
                self.min_wit = LeastWords(vec![w.clone()]);
            }
        }
        match self.max_m {
            Some(k) if m < k => {}
            Some(k) if m == k => self.max_wit.offer(w),
            _ => {
                self.max_m = Some(m);
                self.max_wit = LeastWords(vec![w.clone()]);
            }
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.total += other.total;
        for (m, c) in other.hist {
            *self.hist.entry(m).or_insert(0) += c;
        }
        match (self.min_m, other.min_m) {
            (Some(a), Some(b)) if a == b => self.min_wit.absorb(other.min_wit),
            (Some(a), Some(b)) if b < a => {
                self.min_m = Some(b);
                self.min_wit = other.min_wit;
            }
            (None, Some(b)) => {
                self.min_m = Some(b);
                self.min_wit = other.min_wit;
            }
            _ => {}
        }
        match (self.max_m, other.max_m) {
            (Some(a), Some(b)) if a == b => self.max_wit.absorb(other.max_wit),
            (Some(a), Some(b)) if b > a => {
                self.max_m = Some(b);
                self.max_wit = other.max_wit;
            }
            (None, Some(b)) => {
                self.max_m = Some(b);
                self.max_wit = other.max_wit;
            }
            _ => {}
        }
        self
    }

    fn into_summary(self, length: usize, word_class: WordClass) -> EnumerationSummary {
        EnumerationSummary {
            length,
            word_class,
            total: self.total,
            m_min: self.min_m.unwrap_or(0),
            m_max: self.max_m.unwrap_or(0),
            m_histogram: self.hist,
            min_witnesses: self.min_wit.0,
            max_witnesses: self.max_wit.0,
        }
    }
}

fn run_with_pool<T: Send>(max_workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match max_workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("worker pool")
            .install(f),
        None => f(),
    }
}

/// Sequential cutoff: below this, partitioning costs more than it saves.
const PARALLEL_MIN_LENGTH: usize = 13;
/// Prefix depths used to split the search space across workers.
const ALL_BINARY_PREFIX: usize = 8;
const OVERLAP_FREE_PREFIX: usize = 10;

fn sweep_all_binary(n: usize, max_workers: Option<usize>) -> Partial {
    debug_assert!(n <= 63);
    let words = 1u64 << n;
    let observe_range = |range: std::ops::Range<u64>| {
        let mut part = Partial::default();
        for bits in range {
            let w = Word::from_limb(bits, n);
            part.observe(&w, count_centres(&w));
        }
        part
    };
    if n < PARALLEL_MIN_LENGTH {
        return observe_range(0..words);
    }
    let stride = 1u64 << (n - ALL_BINARY_PREFIX.min(n));
    run_with_pool(max_workers, || {
        (0..words / stride)
            .into_par_iter()
            .map(|chunk| observe_range(chunk * stride..(chunk + 1) * stride))
            .reduce(Partial::default, Partial::merge)
    })
}

fn sweep_overlap_free(n: usize, max_workers: Option<usize>) -> Partial {
    let observe_from = |prefix: &Word| {
        let mut part = Partial::default();
        let mut buffer = prefix.clone();
        dfs(&mut buffer, n, &mut |w| part.observe(w, count_centres(w)));
        part
    };
    if n < PARALLEL_MIN_LENGTH {
        return observe_from(&Word::empty());
    }
    let depth = OVERLAP_FREE_PREFIX.min(n);
    let mut prefixes = Vec::new();
    enumerate_overlap_free(depth, |w| prefixes.push(w.clone()));
    run_with_pool(max_workers, || {
        prefixes
            .par_iter()
            .map(observe_from)
            .reduce(Partial::default, Partial::merge)
    })
}

/// The complete distribution of `M` over the chosen class at length `n`.
/// The class caps in `limits` guard the exponential all-binary sweep and
/// the long overlap-free sweeps.
pub fn stats(n: usize, class: WordClass, limits: &Limits) -> Result<EnumerationSummary, Error> {
    let partial = match class {
        WordClass::AllBinary => {
            check_all_binary_length(n, limits)?;
            sweep_all_binary(n, limits.max_workers)
        }
        WordClass::OverlapFree => {
            check_overlap_free_length(n, limits)?;
            sweep_overlap_free(n, limits.max_workers)
        }
    };
    Ok(partial.into_summary(n, class))
}

/// Guards an all-binary sweep of length `n` against the configured cap
/// and the 63-symbol hard limit of the integer-chunked partitioning.
pub fn check_all_binary_length(n: usize, limits: &Limits) -> Result<(), Error> {
    if n > limits.all_binary_max {
        return Err(Error::CapExceeded {
            name: "all-binary length",
            value: n as u64,
            cap: limits.all_binary_max as u64,
        });
    }
    if n > 63 {
        return Err(Error::InvalidParameter {
            name: "length",
            message: "all-binary sweeps are limited to 63 symbols".into(),
        });
    }
    Ok(())
}

/// Guards an overlap-free sweep of length `n` against the configured cap.
pub fn check_overlap_free_length(n: usize, limits: &Limits) -> Result<(), Error> {
    if n > limits.overlap_free_max {
        return Err(Error::CapExceeded {
            name: "overlap-free length",
            value: n as u64,
            cap: limits.overlap_free_max as u64,
        });
    }
    Ok(())
}

/// Sequential reference for [`stats`], with no partitioning or worker
/// pools anywhere; the partitioned path must reproduce it exactly.
pub fn stats_sequential(
    n: usize,
    class: WordClass,
    limits: &Limits,
) -> Result<EnumerationSummary, Error> {
    let partial = match class {
        WordClass::AllBinary => {
            check_all_binary_length(n, limits)?;
            let mut part = Partial::default();
            for bits in 0..1u64 << n {
                let w = Word::from_limb(bits, n);
                part.observe(&w, count_centres(&w));
            }
            part
        }
        WordClass::OverlapFree => {
            check_overlap_free_length(n, limits)?;
            let mut part = Partial::default();
            let mut buffer = Word::empty();
            dfs(&mut buffer, n, &mut |w| part.observe(w, count_centres(w)));
            part
        }
    };
    Ok(partial.into_summary(n, class))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repetition::is_overlap_free;

    fn w(text: &str) -> Word {
        Word::from_text(text).unwrap()
    }

    #[test]
    fn overlap_free_counts_for_short_lengths() {
        assert_eq!(enumerate_overlap_free(0, |_| {}), 1);
        let counts: Vec<u64> = (1..=6).map(|n| enumerate_overlap_free(n, |_| {})).collect();
        assert_eq!(counts, vec![2, 4, 6, 10, 14, 20]);
    }

    #[test]
    fn length_three_excludes_only_the_cubes() {
        let mut seen = Vec::new();
        enumerate_overlap_free(3, |word| seen.push(word.to_text()));
        assert_eq!(seen, vec!["001", "010", "011", "100", "101", "110"]);
    }

    #[test]
    fn enumeration_is_lexicographic_and_matches_the_filter_oracle() {
        for n in 0..=12usize {
            let mut listed = Vec::new();
            enumerate_overlap_free(n, |word| listed.push(word.clone()));
            let mut filtered: Vec<Word> = (0..1u64 << n)
                .map(|bits| Word::from_limb(bits, n))
                .filter(is_overlap_free)
                .collect();
            filtered.sort();
            assert_eq!(listed, filtered, "length {n}");
        }
    }

    #[test]
    fn stats_examples() {
        let limits = Limits::default();
        let s = stats(5, WordClass::AllBinary, &limits).unwrap();
        assert_eq!(s.total, 32);
        assert_eq!(s.m_min, 1);

        let s = stats(3, WordClass::AllBinary, &limits).unwrap();
        assert_eq!(s.m_min, 0);
        assert!(s.min_witnesses.contains(&w("010")));

        let s = stats(13, WordClass::OverlapFree, &limits).unwrap();
        assert_eq!(s.m_max, 8);
        assert!(s.max_witnesses.contains(&w("0010011010011")));
    }

    #[test]
    fn histogram_accounts_for_every_word() {
        let limits = Limits::default();
        for n in [0usize, 1, 6, 9] {
            let s = stats(n, WordClass::AllBinary, &limits).unwrap();
            assert_eq!(s.total, 1u64 << n);
            assert_eq!(s.m_histogram.values().sum::<u64>(), s.total);
            assert_eq!(*s.m_histogram.keys().next().unwrap(), s.m_min);
            assert_eq!(*s.m_histogram.keys().last().unwrap(), s.m_max);
        }
    }

    #[test]
    fn caps_guard_the_sweeps() {
        let limits = Limits::default();
        assert!(matches!(
            stats(19, WordClass::AllBinary, &limits),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            stats(31, WordClass::OverlapFree, &limits),
            Err(Error::CapExceeded { .. })
        ));
        let raised = Limits {
            all_binary_max: 19,
            ..Limits::default()
        };
        assert!(stats(19, WordClass::AllBinary, &raised).is_ok());
        assert!(matches!(
            stats(
                64,
                WordClass::AllBinary,
                &Limits {
                    all_binary_max: 100,
                    ..Limits::default()
                },
            ),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn partitioned_sweeps_match_sequential_exactly() {
        let limits = Limits {
            max_workers: Some(3),
            ..Limits::default()
        };
        for (n, class) in [
            (14, WordClass::AllBinary),
            (16, WordClass::AllBinary),
            (14, WordClass::OverlapFree),
            (20, WordClass::OverlapFree),
        ] {
            let par = stats(n, class, &limits).unwrap();
            let seq = stats_sequential(n, class, &limits).unwrap();
            assert_eq!(par, seq, "length {n} {class:?}");
        }
    }

    #[test]
    fn witness_lists_are_lexicographically_least() {
        let limits = Limits::default();
        // At length 8 far more than 16 words attain the modal M values,
        // so the bound and the ordering both matter.
        let s = stats(8, WordClass::AllBinary, &limits).unwrap();
        let mut expect_min = Vec::new();
        let mut expect_max = Vec::new();
        for bits in 0..1u64 << 8 {
            let word = Word::from_limb(bits, 8);
            let m = count_centres(&word);
            if m == s.m_min {
                expect_min.push(word.clone());
            }
            if m == s.m_max {
                expect_max.push(word.clone());
            }
        }
        expect_min.sort();
        expect_max.sort();
        expect_min.truncate(WITNESS_CAP);
        expect_max.truncate(WITNESS_CAP);
        assert_eq!(s.min_witnesses, expect_min);
        assert_eq!(s.max_witnesses, expect_max);
        assert!(s.min_witnesses.len() <= WITNESS_CAP);
    }

    #[test]
    fn summary_serialization_shape() {
        let limits = Limits::default();
        let s = stats(2, WordClass::OverlapFree, &limits).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            concat!(
                r#"{"length":2,"word_class":"overlap-free","total":4,"#,
                r#""m_min":0,"m_max":1,"m_histogram":{"0":2,"1":2},"#,
                r#""min_witnesses":["01","10"],"max_witnesses":["00","11"]}"#
            )
        );
    }
}
