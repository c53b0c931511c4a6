//! Arch factorization and the per-position arrays used for ranking.
//!
//! An arch is a factor containing every symbol of the alphabet whose last
//! symbol occurs nowhere earlier in the factor. Cutting a word greedily into
//! arches from the left leaves a residual suffix missing at least one symbol;
//! the number of arches is the universality index of the word.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::words::{format_symbols, SymbolSet, Word};

/// Greedy arch factorization. All positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchFactorization {
    arch_starts: Vec<usize>,
    suffix_start: usize,
    source_length: usize,
}

impl ArchFactorization {
    /// 1-based start positions `A_1, .., A_r` of the arches.
    pub fn arch_starts(&self) -> &[usize] {
        &self.arch_starts
    }

    /// Universality index of the source word.
    pub fn arch_count(&self) -> usize {
        self.arch_starts.len()
    }

    /// 1-based start of the residual suffix; `n + 1` when the suffix is empty.
    pub fn suffix_start(&self) -> usize {
        self.suffix_start
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    /// 0-based index range of the `ell`-th arch (1-based `ell`).
    pub fn arch_range(&self, ell: usize) -> Range<usize> {
        let start = self.arch_starts[ell - 1] - 1;
        let end = self
            .arch_starts
            .get(ell)
            .copied()
            .unwrap_or(self.suffix_start)
            - 1;
        start..end
    }

    pub fn factors<'w>(&self, w: &'w Word) -> Vec<&'w [u32]> {
        (1..=self.arch_count())
            .map(|ell| &w.symbols()[self.arch_range(ell)])
            .collect()
    }

    pub fn suffix<'w>(&self, w: &'w Word) -> &'w [u32] {
        &w.symbols()[self.suffix_start - 1..]
    }

    /// Arches and the non-empty residual suffix, separated by `,` for digit
    /// alphabets and by `;` when symbols are themselves comma-separated.
    pub fn display(&self, w: &Word) -> String {
        let separator = if w.alphabet().uses_digits() { "," } else { ";" };
        let mut parts: Vec<String> = self
            .factors(w)
            .into_iter()
            .map(|f| format_symbols(f, w.alphabet()))
            .collect();
        let suffix = self.suffix(w);
        if !suffix.is_empty() {
            parts.push(format_symbols(suffix, w.alphabet()));
        }
        parts.join(separator)
    }
}

/// Factorizes `w` into arches in a single left-to-right pass.
pub fn arch_factorize(w: &Word) -> ArchFactorization {
    let sigma = w.sigma() as usize;
    // last_arch[s] == arch id in which symbol s was last seen
    let mut last_arch = vec![usize::MAX; sigma];
    let mut arch_id = 0;
    let mut distinct = 0;
    let mut start = 1;
    let mut arch_starts = Vec::new();
    for (i, &s) in w.symbols().iter().enumerate() {
        let slot = &mut last_arch[(s - 1) as usize];
        if *slot != arch_id {
            *slot = arch_id;
            distinct += 1;
            if distinct == sigma {
                arch_starts.push(start);
                start = i + 2;
                arch_id += 1;
                distinct = 0;
            }
        }
    }
    ArchFactorization {
        arch_starts,
        suffix_start: start,
        source_length: w.len(),
    }
}

pub fn universality_index(w: &Word) -> usize {
    arch_factorize(w).arch_count()
}

pub fn is_k_universal(w: &Word, k: usize) -> bool {
    k == 0 || universality_index(w) >= k
}

/// Per-position data for ranking a fixed word against `U(n, k, σ)`.
///
/// Accessors take 1-based positions.
#[derive(Debug, Clone)]
pub struct RankContext {
    factorization: ArchFactorization,
    k: usize,
    delta: Vec<u32>,
    free_suffix: Vec<usize>,
    arch_prefix_sets: Vec<SymbolSet>,
    closed_arches: Vec<usize>,
}

impl RankContext {
    pub fn factorization(&self) -> &ArchFactorization {
        &self.factorization
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    /// Distinct symbols in `w[A_ℓ, i]`, where `A_ℓ` starts the arch (or residual
    /// suffix) containing `i`.
    pub fn delta(&self, i: usize) -> u32 {
        self.delta[i - 1]
    }

    /// Free positions in `w[i, n]`, for `i` in `1..=n+1`.
    pub fn free_suffix(&self, i: usize) -> usize {
        self.free_suffix[i - 1]
    }

    /// Symbols of `w[A_ℓ, i]`.
    pub fn arch_prefix_set(&self, i: usize) -> &SymbolSet {
        &self.arch_prefix_sets[i - 1]
    }

    /// Arches completed within the prefix `w[1, i]`, for `i` in `0..=n`.
    pub fn closed_arches(&self, i: usize) -> usize {
        self.closed_arches[i]
    }
}

pub fn build_rank_context(w: &Word, k: usize) -> Result<RankContext> {
    if k < 1 {
        return Err(Error::InvalidK {
            k,
            reason: "ranking context needs k >= 1",
        });
    }
    let n = w.len();
    let sigma = w.sigma();
    let factorization = arch_factorize(w);

    // 1-based start -> arch number (r + 1 marks the residual suffix)
    let mut region_starts = factorization.arch_starts.clone();
    region_starts.push(factorization.suffix_start);

    let mut delta = Vec::with_capacity(n);
    let mut arch_prefix_sets = Vec::with_capacity(n);
    let mut closed_arches = Vec::with_capacity(n + 1);
    let mut free = vec![false; n];
    closed_arches.push(0);

    let mut seen = SymbolSet::new(sigma);
    let mut region = 0;
    let mut closed = 0;
    for (idx, &s) in w.symbols().iter().enumerate() {
        let pos = idx + 1;
        if region < region_starts.len() && region_starts[region] == pos {
            seen.clear();
            region += 1;
        }
        let fresh = seen.insert(s);
        // region is the 1-based arch number; arch r + 1 is the residual suffix
        let constrained = region <= k && region <= factorization.arch_count();
        free[idx] = !(constrained && fresh);
        delta.push(seen.len() as u32);
        arch_prefix_sets.push(seen.clone());
        if seen.len() == sigma as usize {
            closed += 1;
        }
        closed_arches.push(closed);
    }

    let mut free_suffix = vec![0; n + 1];
    for i in (0..n).rev() {
        free_suffix[i] = free_suffix[i + 1] + usize::from(free[i]);
    }

    Ok(RankContext {
        factorization,
        k,
        delta,
        free_suffix,
        arch_prefix_sets,
        closed_arches,
    })
}
