//! Naive reference implementations.
//!
//! Nothing here touches arches or the suffix table: universality is checked
//! by testing every word of length `k` as a subsequence, and sets are built
//! by filtering all of `Σ^n`. Inputs are guarded so that a test never
//! silently runs on a truncated oracle.

use crate::closed_forms::BigCount;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// Largest `σ^k` pattern set [`brute_is_k_universal`] will enumerate.
pub const PATTERN_LIMIT: u64 = 1_000_000;
/// Largest `σ^n` word set [`brute_enumerate`] will enumerate.
pub const WORD_LIMIT: u64 = 10_000_000;

fn guarded_power(sigma: u32, exp: usize, limit: u64, what: &'static str) -> Result<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(u64::from(sigma));
        if acc > limit {
            return Err(Error::GuardExceeded {
                what,
                size: format!("{sigma}^{exp}"),
                limit,
            });
        }
    }
    Ok(acc)
}

fn is_subsequence(pattern: &[u32], text: &[u32]) -> bool {
    let mut it = text.iter();
    pattern.iter().all(|p| it.any(|t| t == p))
}

/// Advances `word` to its lexicographic successor in `{1..σ}^len`; false on wrap-around.
fn odometer_step(word: &mut [u32], sigma: u32) -> bool {
    for slot in word.iter_mut().rev() {
        if *slot < sigma {
            *slot += 1;
            return true;
        }
        *slot = 1;
    }
    false
}

fn universal_by_search(text: &[u32], k: usize, sigma: u32) -> bool {
    let mut pattern = vec![1; k];
    loop {
        if !is_subsequence(&pattern, text) {
            return false;
        }
        if !odometer_step(&mut pattern, sigma) {
            return true;
        }
    }
}

/// Whether every word of length `k` over the alphabet of `w` is a subsequence of `w`.
pub fn brute_is_k_universal(w: &Word, k: usize) -> Result<bool> {
    guarded_power(w.sigma(), k, PATTERN_LIMIT, "pattern set")?;
    Ok(universal_by_search(w.symbols(), k, w.sigma()))
}

/// All k-universal words of length `n` over `{1..σ}`, in lexicographic order.
pub fn brute_enumerate(n: usize, k: usize, sigma: u32) -> Result<Vec<Word>> {
    let alphabet = Alphabet::new(sigma)?;
    guarded_power(sigma, n, WORD_LIMIT, "word set")?;
    guarded_power(sigma, k, PATTERN_LIMIT, "pattern set")?;
    let mut out = Vec::new();
    let mut word = vec![1; n];
    loop {
        if universal_by_search(&word, k, sigma) {
            out.push(Word::new(word.clone(), alphabet)?);
        }
        if !odometer_step(&mut word, sigma) {
            return Ok(out);
        }
    }
}

/// All words of `{1..σ}^n` in lexicographic order.
pub fn all_words(n: usize, sigma: u32) -> Result<Vec<Word>> {
    let alphabet = Alphabet::new(sigma)?;
    guarded_power(sigma, n, WORD_LIMIT, "word set")?;
    let mut out = Vec::new();
    let mut word = vec![1; n];
    loop {
        out.push(Word::new(word.clone(), alphabet)?);
        if !odometer_step(&mut word, sigma) {
            return Ok(out);
        }
    }
}

/// Number of members of `brute_enumerate(|w|, k, σ)` smaller than `w`.
pub fn brute_rank(w: &Word, k: usize) -> Result<BigCount> {
    let members = brute_enumerate(w.len(), k, w.sigma())?;
    Ok(insertion_index(&members, w).into())
}

/// Lower-bound insertion point of `w` in a sorted member list.
pub fn insertion_index(members: &[Word], w: &Word) -> usize {
    members.partition_point(|u| u.symbols() < w.symbols())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{format_word, parse_word};

    #[test]
    fn figure_word_is_four_universal() {
        let w = parse_word("11234432122314332144", 4).unwrap();
        assert!(brute_is_k_universal(&w, 4).unwrap());
        assert!(!brute_is_k_universal(&w, 5).unwrap());
        let v = parse_word("12234323134112344412", 4).unwrap();
        assert!(brute_is_k_universal(&v, 3).unwrap());
        assert!(!brute_is_k_universal(&v, 4).unwrap());
    }

    #[test]
    fn small_checks() {
        let ones = parse_word("1111", 2).unwrap();
        assert!(!brute_is_k_universal(&ones, 1).unwrap());
        assert!(brute_is_k_universal(&ones, 0).unwrap());
        let listed: Vec<String> = brute_enumerate(4, 2, 2)
            .unwrap()
            .iter()
            .map(format_word)
            .collect();
        assert_eq!(listed, ["1212", "1221", "2112", "2121"]);
        let listed: Vec<String> = brute_enumerate(2, 1, 2)
            .unwrap()
            .iter()
            .map(format_word)
            .collect();
        assert_eq!(listed, ["12", "21"]);
        assert!(brute_enumerate(3, 2, 2).unwrap().is_empty());
    }

    #[test]
    fn ranks() {
        let r = |t: &str| brute_rank(&parse_word(t, 2).unwrap(), 2).unwrap();
        assert_eq!(r("2112"), BigCount::from(2u32));
        assert_eq!(r("1111"), BigCount::from(0u32));
        assert_eq!(r("2222"), BigCount::from(4u32));
    }

    #[test]
    fn guards_are_errors() {
        assert!(matches!(
            brute_enumerate(30, 1, 2),
            Err(Error::GuardExceeded { .. })
        ));
        let w = parse_word("12", 2).unwrap();
        assert!(matches!(
            brute_is_k_universal(&w, 21),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
