//! Word families with extremal centre counts.
//!
//! The main object is `w_n = 00 α_n ᾱ_n` (ᾱ drops the last letter of α):
//! an overlap-free word of length 6·2ⁿ+1 whose centre count meets
//! `2M(w) = |w| + 3` with equality. The second device composes two
//! overlap-free words: if `xw` and `ww` are overlap-free and `s` is the
//! longest common suffix of `x` and `w`, then `x w (w s⁻¹)` is
//! overlap-free.

use serde::Serialize;

use crate::error::Error;
use crate::repetition::{analyze, special_status, AnalysisReport};
use crate::thue_morse::alpha;
use crate::word::Word;

/// A built `w_n` together with its full analysis.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionResult {
    pub word: Word,
    pub n: u32,
    pub expected_length: usize,
    pub report: AnalysisReport,
}

/// Builds `w_n = 00 ++ α_n ++ ᾱ_n` and analyzes it; requires `n >= 1`.
pub fn build_wn(n: u32) -> Result<ConstructionResult, Error> {
    let a = alpha(n)?;
    let word = Word::from_text("00")
        .unwrap()
        .concat(&a)
        .concat(&a.drop_suffix(1).unwrap());
    let expected_length = 2 * a.len() + 1;
    debug_assert_eq!(word.len(), expected_length);
    debug_assert_eq!(expected_length, (6usize << n) + 1);
    let report = analyze(&word);
    Ok(ConstructionResult {
        word,
        n,
        expected_length,
        report,
    })
}

/// The composition `x ++ w ++ (w s⁻¹)` where `s` is the longest common
/// suffix of `x` and `w`. Total: hypotheses on `xw` and `ww` are the
/// verifier's business, not this constructor's.
pub fn lemma2_compose(x: &Word, w: &Word) -> Word {
    let s = x.longest_common_suffix(w);
    x.concat(w)
        .concat(&w.drop_suffix(s.len()).expect("s is a suffix of w"))
}

/// Checks the three defining properties of `w_n`: overlap-free, special
/// prefix 001001, and `2M = length + 3`.
pub fn verify_wn(n: u32) -> Result<(bool, ConstructionResult), Error> {
    let built = build_wn(n)?;
    let ok = built.report.overlap_free
        && special_status(&built.word).prefix_special_prefix
        && built.report.bound_lhs == built.report.bound_rhs;
    Ok((ok, built))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repetition::{centres, count_centres};

    fn w(text: &str) -> Word {
        Word::from_text(text).unwrap()
    }

    #[test]
    fn first_member_of_the_family() {
        let built = build_wn(1).unwrap();
        assert_eq!(built.word, w("0010011010011"));
        assert_eq!(built.expected_length, 13);
        assert_eq!(built.report.m, 8);
        assert_eq!(built.report.tight, Some(true));
        assert!(build_wn(0).is_err());
    }

    #[test]
    fn lengths_follow_the_formula() {
        for n in 1..=6 {
            let built = build_wn(n).unwrap();
            assert_eq!(built.word.len(), (6usize << n) + 1);
            assert_eq!(built.word.len(), built.expected_length);
        }
        assert_eq!(build_wn(2).unwrap().word.len(), 25);
    }

    #[test]
    fn alternative_bracketing() {
        // w_n = 0 (0ᾱ_n)(0ᾱ_n): valid because α_n ends in 0.
        for n in 1..=6 {
            let a = alpha(n).unwrap();
            let q = w("0").concat(&a.drop_suffix(1).unwrap());
            let rebracketed = w("0").concat(&q).concat(&q);
            assert_eq!(build_wn(n).unwrap().word, rebracketed);
        }
    }

    #[test]
    fn composition_examples() {
        assert_eq!(lemma2_compose(&w("0"), &w("100110")), w("010011010011"));
        assert_eq!(lemma2_compose(&w("1"), &w("01")), w("1010"));
        let any = w("100110");
        assert_eq!(lemma2_compose(&w(""), &any), any.concat(&any));
        // x = w: the common suffix is all of w and the third part vanishes.
        assert_eq!(lemma2_compose(&w("01"), &w("01")), w("0101"));
    }

    #[test]
    fn family_verification_samples() {
        let (ok, built) = verify_wn(1).unwrap();
        assert!(ok);
        assert_eq!(built.word.len(), 13);

        let (ok, built) = verify_wn(2).unwrap();
        assert!(ok);
        // 2M = 25 + 3 forces M = 14 = |alpha_2| - 1 + 3.
        assert_eq!(built.report.m, 14);
        assert_eq!(built.word.len(), 25);

        let (ok, built) = verify_wn(5).unwrap();
        assert!(ok);
        assert_eq!(built.word.len(), 193);
    }

    #[test]
    fn doubled_alpha_centre_counts() {
        for n in 1..=6 {
            let a = alpha(n).unwrap();
            let doubled = a.concat(&a);
            let cs = centres(&doubled);
            assert!(cs.iter().all(|p| p.index() % 2 == 0));
            assert_eq!(cs.len(), a.len() - 1);
            let trimmed = a.concat(&a.drop_suffix(1).unwrap());
            assert_eq!(count_centres(&trimmed), a.len() - 1);
        }
    }

    #[test]
    fn consecutive_centres_three_and_four() {
        for n in 1..=6 {
            let built = build_wn(n).unwrap();
            let cs: Vec<usize> = built.report.centres.iter().map(|p| p.index()).collect();
            assert!(cs.contains(&3) && cs.contains(&4));
        }
    }
}
