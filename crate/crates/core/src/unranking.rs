//! Unranking and lexicographic enumeration of `U(n, k, σ)`.

use num_traits::{One, Zero};

use crate::closed_forms::BigCount;
use crate::error::{Error, Result};
use crate::universal_dp::SuffixCountTable;
use crate::words::{Alphabet, SymbolSet, Word};

/// Arch bookkeeping for a prefix: closed arches and the symbols of the open one.
#[derive(Debug, Clone)]
struct PrefixState {
    closed: usize,
    open: SymbolSet,
}

impl PrefixState {
    fn empty(sigma: usize) -> Self {
        PrefixState {
            closed: 0,
            open: SymbolSet::new(sigma as u32),
        }
    }

    /// Members extending this prefix followed by `x`, with `remaining` positions after `x`.
    fn completions_after<'t>(
        &self,
        x: u32,
        remaining: usize,
        table: &'t SuffixCountTable,
    ) -> &'t BigCount {
        let sigma = table.sigma();
        let open = self.open.len() + usize::from(!self.open.contains(x));
        if open == sigma {
            table.completions(self.closed + 1, 0, remaining)
        } else {
            table.completions(self.closed, open, remaining)
        }
    }

    fn pushed(&self, x: u32, sigma: usize) -> Self {
        let mut next = self.clone();
        if next.open.insert(x) && next.open.len() == sigma {
            next.closed += 1;
            next.open.clear();
        }
        next
    }
}

/// Chooses symbols for positions `start..n` so that the completed word has
/// exactly `offset` smaller members sharing the prefix `word[..start]`.
fn descend(
    table: &SuffixCountTable,
    word: &mut [u32],
    states: &mut [PrefixState],
    start: usize,
    mut offset: BigCount,
) {
    let n = table.n();
    let sigma = table.sigma();
    for j in start..n {
        let remaining = n - j - 1;
        let mut chosen = None;
        for x in 1..=sigma as u32 {
            let count = states[j].completions_after(x, remaining, table);
            if &offset < count {
                chosen = Some(x);
                break;
            }
            offset -= count;
        }
        let x = chosen.expect("offset exceeds the members sharing this prefix");
        word[j] = x;
        states[j + 1] = states[j].pushed(x, sigma);
    }
}

fn check_rank(r: &BigCount, table: &SuffixCountTable) -> Result<()> {
    let total = table.total();
    if total.is_zero() {
        return Err(Error::EmptySet);
    }
    if r >= total {
        return Err(Error::RankOutOfRange {
            rank: r.clone(),
            size: total.clone(),
        });
    }
    Ok(())
}

fn alphabet_of(table: &SuffixCountTable) -> Alphabet {
    Alphabet::new(table.sigma() as u32).expect("table alphabet is non-empty")
}

/// The member of `U(n, k, σ)` with exactly `r` smaller members.
pub fn unrank(r: &BigCount, table: &SuffixCountTable) -> Result<Word> {
    check_rank(r, table)?;
    let n = table.n();
    let mut word = vec![0; n];
    let mut states = vec![PrefixState::empty(table.sigma()); n + 1];
    descend(table, &mut word, &mut states, 0, r.clone());
    Ok(Word::from_trusted(word, alphabet_of(table)))
}

/// Streams members of `U(n, k, σ)` in increasing lexicographic order.
///
/// The first word is found by unranking; every later word is derived from
/// its predecessor by bumping the rightmost position that still admits a
/// completion and filling the tail with the smallest completion. Both steps
/// take at most `n·σ` table lookups.
#[derive(Debug)]
pub struct EnumerationCursor<'t> {
    table: &'t SuffixCountTable,
    word: Vec<u32>,
    states: Vec<PrefixState>,
    next_rank: BigCount,
    end: BigCount,
    primed: bool,
}

impl<'t> EnumerationCursor<'t> {
    /// Rank of the word the next call to `next` returns.
    pub fn next_rank(&self) -> &BigCount {
        &self.next_rank
    }

    pub fn table(&self) -> &'t SuffixCountTable {
        self.table
    }

    fn advance(&mut self) -> bool {
        let n = self.table.n();
        let sigma = self.table.sigma() as u32;
        for j in (0..n).rev() {
            let remaining = n - j - 1;
            for x in self.word[j] + 1..=sigma {
                if !self.states[j]
                    .completions_after(x, remaining, self.table)
                    .is_zero()
                {
                    self.word[j] = x;
                    self.states[j + 1] = self.states[j].pushed(x, sigma as usize);
                    descend(
                        self.table,
                        &mut self.word,
                        &mut self.states,
                        j + 1,
                        BigCount::zero(),
                    );
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for EnumerationCursor<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.next_rank >= self.end {
            return None;
        }
        if self.primed {
            if !self.advance() {
                self.end = self.next_rank.clone();
                return None;
            }
        } else {
            descend(
                self.table,
                &mut self.word,
                &mut self.states,
                0,
                self.next_rank.clone(),
            );
            self.primed = true;
        }
        self.next_rank += 1u32;
        Some(Word::from_trusted(
            self.word.clone(),
            alphabet_of(self.table),
        ))
    }
}

/// Cursor over members with ranks in `from_rank..` (at most `limit` of them).
pub fn enumerate(
    table: &SuffixCountTable,
    from_rank: BigCount,
    limit: Option<u64>,
) -> Result<EnumerationCursor<'_>> {
    let total = table.total().clone();
    if from_rank > total {
        return Err(Error::RankOutOfRange {
            rank: from_rank,
            size: total,
        });
    }
    let end = match limit {
        Some(limit) => (&from_rank + limit).min(total),
        None => total,
    };
    let n = table.n();
    Ok(EnumerationCursor {
        table,
        word: vec![0; n],
        states: vec![PrefixState::empty(table.sigma()); n + 1],
        next_rank: from_rank,
        end,
        primed: false,
    })
}

/// Rank-by-rank enumeration: one full unrank per word.
pub fn enumerate_by_unrank(
    table: &SuffixCountTable,
    from_rank: BigCount,
    limit: Option<u64>,
) -> Result<impl Iterator<Item = Word> + '_> {
    let cursor = enumerate(table, from_rank.clone(), limit)?;
    let end = cursor.end.clone();
    let mut r = from_rank;
    Ok(std::iter::from_fn(move || {
        if r >= end {
            return None;
        }
        let word = unrank(&r, table).ok()?;
        r += BigCount::one();
        Some(word)
    }))
}
