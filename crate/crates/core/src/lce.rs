//! Longest common extensions: `lce(i, j)` is the length of the longest
//! common prefix of the suffixes of a word starting at 0-based `i` and `j`.
//!
//! Squares and overlaps reduce to extension queries — a square with root
//! length `l` is centred after position `p` iff `lce(p - l, p) >= l`, and
//! an overlap starts at `s` with period `q` iff `lce(s, s + q) >= q + 1` —
//! so one precomputation per word answers every repetition question.
//!
//! Words of at most 64 symbols fit in one machine word and are answered
//! with a shift/xor/trailing-zeros sequence. Longer words get a suffix
//! array (doubling), its LCP array (Kasai) and a sparse table, for O(1)
//! queries after O(n log n) setup.

use crate::word::{mask, Word};

pub(crate) enum Lce {
    Small { bits: u64, len: usize },
    Indexed(IndexedLce),
}

impl Lce {
    pub(crate) fn new(word: &Word) -> Self {
        if word.len() <= 64 {
            Lce::Small {
                bits: word.first_limb(),
                len: word.len(),
            }
        } else {
            Lce::Indexed(IndexedLce::new(word))
        }
    }

    pub(crate) fn len(&self) -> usize {
        match self {
            Lce::Small { len, .. } => *len,
            Lce::Indexed(ix) => ix.len,
        }
    }

    pub(crate) fn lce(&self, i: usize, j: usize) -> usize {
        match self {
            Lce::Small { bits, len } => {
                debug_assert!(i <= *len && j <= *len);
                if i == j {
                    return len - i;
                }
                let hi = i.max(j);
                if hi >= *len {
                    return 0;
                }
                let span = len - hi;
                let x = ((bits >> i) ^ (bits >> j)) & mask(span);
                if x == 0 {
                    span
                } else {
                    x.trailing_zeros() as usize
                }
            }
            Lce::Indexed(ix) => ix.lce(i, j),
        }
    }
}

pub(crate) struct IndexedLce {
    len: usize,
    rank: Vec<usize>,
    sparse: SparseMin,
}

impl IndexedLce {
    pub(crate) fn new(word: &Word) -> Self {
        let symbols: Vec<u8> = word.symbols().collect();
        let (sa, rank) = suffix_array(&symbols);
        let lcp = kasai(&symbols, &sa, &rank);
        IndexedLce {
            len: symbols.len(),
            rank,
            sparse: SparseMin::new(lcp),
        }
    }

    fn lce(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= self.len && j <= self.len);
        if i == j {
            return self.len - i;
        }
        if i >= self.len || j >= self.len {
            return 0;
        }
        let (a, b) = if self.rank[i] < self.rank[j] {
            (self.rank[i], self.rank[j])
        } else {
            (self.rank[j], self.rank[i])
        };
        self.sparse.min(a, b - 1)
    }
}

/// Suffix array by rank doubling; returns `(sa, rank)` with
/// `rank[sa[t]] == t`.
fn suffix_array(symbols: &[u8]) -> (Vec<usize>, Vec<usize>) {
    let n = symbols.len();
    if n <= 1 {
        return ((0..n).collect(), vec![0; n]);
    }
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<i64> = symbols.iter().map(|&s| s as i64).collect();
    let mut next = vec![0i64; n];
    let mut k = 1;
    loop {
        let key = |i: usize, rank: &[i64]| (rank[i], if i + k < n { rank[i + k] } else { -1 });
        sa.sort_unstable_by_key(|&i| key(i, &rank));
        next[sa[0]] = 0;
        for t in 1..n {
            next[sa[t]] = next[sa[t - 1]] + (key(sa[t], &rank) != key(sa[t - 1], &rank)) as i64;
        }
        std::mem::swap(&mut rank, &mut next);
        // Ranks strictly refine every round, so they are all distinct
        // (the top rank reaches n-1) after at most ⌈log₂ n⌉ doublings.
        if rank[sa[n - 1]] == (n - 1) as i64 {
            break;
        }
        k *= 2;
    }
    let rank = rank.into_iter().map(|r| r as usize).collect();
    (sa, rank)
}

/// Kasai's algorithm: `lcp[t]` = common-prefix length of the suffixes at
/// `sa[t]` and `sa[t + 1]`.
fn kasai(symbols: &[u8], sa: &[usize], rank: &[usize]) -> Vec<usize> {
    let n = symbols.len();
    let mut lcp = vec![0usize; n.saturating_sub(1)];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] + 1 < n {
            let j = sa[rank[i] + 1];
            while i + h < n && j + h < n && symbols[i + h] == symbols[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

/// Idempotent range minimum over a fixed slice: `min(a, b)` covers the
/// inclusive index range `a..=b`.
struct SparseMin {
    rows: Vec<Vec<usize>>,
}

impl SparseMin {
    fn new(values: Vec<usize>) -> Self {
        let n = values.len();
        let levels = if n <= 1 { 1 } else { n.ilog2() as usize + 1 };
        let mut rows = Vec::with_capacity(levels);
        rows.push(values);
        for j in 1..levels {
            let half = 1usize << (j - 1);
            let prev = &rows[j - 1];
            let row: Vec<usize> = (0..prev.len().saturating_sub(half))
                .map(|i| prev[i].min(prev[i + half]))
                .collect();
            rows.push(row);
        }
        SparseMin { rows }
    }

    fn min(&self, a: usize, b: usize) -> usize {
        debug_assert!(a <= b && b < self.rows[0].len());
        let j = (b - a + 1).ilog2() as usize;
        self.rows[j][a].min(self.rows[j][b + 1 - (1 << j)])
    }
}
