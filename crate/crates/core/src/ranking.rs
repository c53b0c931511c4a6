//! Lexicographic rank of a word among `U(n, k, σ)`.

use num_traits::Zero;

use crate::arches::build_rank_context;
use crate::closed_forms::BigCount;
use crate::error::{Error, Result};
use crate::universal_dp::SuffixCountTable;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    /// Members of `U(n, k, σ)` strictly smaller than the word (0-based rank).
    pub rank: BigCount,
    /// Whether the word itself is in `U(n, k, σ)`.
    pub member: bool,
}

pub(crate) fn check_table(table: &SuffixCountTable, k: usize, sigma: u32) -> Result<()> {
    if table.sigma() != sigma as usize {
        return Err(Error::AlphabetMismatch {
            left: sigma,
            right: table.sigma() as u32,
        });
    }
    if table.k() != k {
        return Err(Error::InvalidK {
            k,
            reason: "table was built for a different k",
        });
    }
    Ok(())
}

/// Ranks any word of length `table.n()`; the word need not be a member.
///
/// For each prefix `w[1, i]` the members starting with `w[1, i] x`, `x < w[i+1]`,
/// are counted. Symbols `x` already present in the open arch all lead to the
/// same suffix state, as do the absent ones, so each prefix costs two lookups.
pub fn rank(w: &Word, k: usize, table: &SuffixCountTable) -> Result<RankResult> {
    check_table(table, k, w.sigma())?;
    if w.len() != table.n() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: table.n(),
        });
    }
    let n = w.len();
    let sigma = table.sigma();
    let mut rank = BigCount::zero();

    if k == 0 {
        for (i, &next) in w.symbols().iter().enumerate() {
            rank += table.completions(0, 0, n - i - 1) * (next - 1);
        }
        return Ok(RankResult { rank, member: true });
    }

    let ctx = build_rank_context(w, k)?;
    for (i, &next) in w.symbols().iter().enumerate() {
        let smaller = (next - 1) as usize;
        if smaller == 0 {
            continue;
        }
        let remaining = n - i - 1;
        let closed = ctx.closed_arches(i);
        if closed >= k {
            rank += table.completions(closed, 0, remaining) * smaller;
            continue;
        }
        let (open, repeats) = if i == 0 || ctx.delta(i) as usize == sigma {
            (0, 0)
        } else {
            let set = ctx.arch_prefix_set(i);
            (set.len(), set.count_below(next))
        };
        let fresh = smaller - repeats;
        if repeats > 0 {
            rank += table.completions(closed, open, remaining) * repeats;
        }
        if fresh > 0 {
            let after = if open + 1 == sigma {
                table.completions(closed + 1, 0, remaining)
            } else {
                table.completions(closed, open + 1, remaining)
            };
            rank += after * fresh;
        }
    }
    let member = ctx.factorization().arch_count() >= k;
    Ok(RankResult { rank, member })
}
