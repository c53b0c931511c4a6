//! Counting, ranking, unranking and enumeration of k-subsequence-universal words.
//!
//! A word over the alphabet `{1..σ}` is *k-subsequence universal* when every
//! word of length `k` over the same alphabet occurs in it as a (scattered)
//! subsequence. The set of such words of length `n` is written `U(n, k, σ)`
//! throughout this crate.
//!
//! The modules build on each other:
//!
//! - [`words`]: the validated [`Word`] type and its text format.
//! - [`arches`]: greedy arch factorization and the per-position arrays used by ranking.
//! - [`closed_forms`]: inclusion-exclusion counts for the `k <= 1` cases.
//! - [`universal_dp`]: the suffix-state table and `|U(n, k, σ)|`.
//! - [`ranking`], [`unranking`]: lexicographic rank, unrank and streaming enumeration.
//! - [`oracle`]: naive reference implementations used for cross-checking.
//! - [`cli`]: the `univ` command-line front end.

pub mod arches;
pub mod cli;
pub mod closed_forms;
mod error;
pub mod oracle;
pub mod ranking;
pub mod universal_dp;
pub mod unranking;
pub mod words;

pub use arches::{arch_factorize, build_rank_context, is_k_universal, universality_index};
pub use arches::{ArchFactorization, RankContext};
pub use closed_forms::{count_arches, count_index_zero, count_one_universal, BigCount};
pub use error::{Error, Result};
pub use ranking::{rank, RankResult};
pub use universal_dp::{build_table, count_universal, SuffixCountTable};
pub use unranking::{enumerate, unrank, EnumerationCursor};
pub use words::{format_word, lex_compare, make_word, parse_word, Alphabet, SymbolSet, Word};
