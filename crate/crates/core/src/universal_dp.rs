//! Suffix-state dynamic program for `|U(n, k, σ)|`.
//!
//! A prefix of a candidate word is summarised by the state `(q, m, c)`:
//!
//! - `q`: distinct symbols already seen in the open (incomplete) arch,
//! - `m`: free symbols the remaining suffix may still spend,
//! - `c`: arches still to complete, counting the open one.
//!
//! For `c >= 1` the remaining length is `m + (σ - q) + σ(c - 1)`. Entry
//! `(q, m, c)` counts the suffixes of that length which complete the `c`
//! arches. `q = σ` denotes an arch that has just been closed; for `c = 1` the
//! rest of the word is unconstrained, otherwise a fresh arch `(0, m, c - 1)`
//! begins. Layer `c = 0` is `σ^m` for every `q`.

use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Zero};

use crate::closed_forms::BigCount;
use crate::error::{Error, Result};

/// Filled suffix-count table for fixed `(n, k, σ)`.
///
/// Every read through [`SuffixCountTable::entry`] or
/// [`SuffixCountTable::completions`] increments a lookup counter, which the
/// delay and scaling checks use as a machine-independent cost measure.
#[derive(Debug)]
pub struct SuffixCountTable {
    n: usize,
    k: usize,
    sigma: usize,
    powers: Vec<BigCount>,
    layers: Vec<BigCount>,
    zero: BigCount,
    build_lookups: u64,
    lookups: AtomicU64,
}

struct LayerFiller<'a> {
    n: usize,
    sigma: usize,
    powers: &'a [BigCount],
    lookups: u64,
}

impl LayerFiller<'_> {
    fn width(&self) -> usize {
        self.sigma + 1
    }

    /// Fills layer `c >= 1` given layer `c - 1` (`None` when `c - 1 == 0`).
    fn fill(&mut self, c: usize, prev: Option<&[BigCount]>) -> Vec<BigCount> {
        let width = self.width();
        let sigma = self.sigma;
        let mut layer = vec![BigCount::zero(); (self.n + 1) * width];
        for m in 0..=self.n {
            let row = m * width;
            layer[row + sigma] = match prev {
                None => {
                    debug_assert_eq!(c, 1);
                    self.lookups += 1;
                    self.powers[m].clone()
                }
                Some(prev) => {
                    self.lookups += 1;
                    prev[row].clone()
                }
            };
            for q in (0..sigma).rev() {
                // a new symbol: σ - q choices, advances q
                self.lookups += 1;
                let mut value = &layer[row + q + 1] * (sigma - q);
                // a repeated symbol: q choices, spends one free symbol
                if m > 0 && q > 0 {
                    self.lookups += 1;
                    value += &layer[row - width + q] * q;
                }
                layer[row + q] = value;
            }
        }
        layer
    }
}

fn powers_of(sigma: usize, upto: usize) -> Vec<BigCount> {
    let mut powers = Vec::with_capacity(upto + 1);
    powers.push(BigCount::one());
    for i in 1..=upto {
        let next = &powers[i - 1] * sigma;
        powers.push(next);
    }
    powers
}

/// Builds the table for all `q in 0..=σ`, `m in 0..=n`, `c in 0..=k`.
pub fn build_table(n: usize, k: usize, sigma: usize) -> Result<SuffixCountTable> {
    if sigma == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let powers = powers_of(sigma, n);
    let mut filler = LayerFiller {
        n,
        sigma,
        powers: &powers,
        lookups: 0,
    };
    let layer_len = (n + 1) * (sigma + 1);
    let mut layers: Vec<BigCount> = Vec::with_capacity(layer_len * k);
    for c in 1..=k {
        let prev = (c > 1).then(|| &layers[(c - 2) * layer_len..(c - 1) * layer_len]);
        let layer = filler.fill(c, prev);
        layers.extend(layer);
    }
    let build_lookups = filler.lookups;
    Ok(SuffixCountTable {
        n,
        k,
        sigma,
        powers,
        layers,
        zero: BigCount::zero(),
        build_lookups,
        lookups: AtomicU64::new(0),
    })
}

/// `|U(n, k, σ)|`, together with the number of table reads the fill took.
///
/// Runs the same fill as [`build_table`] but keeps only two layers alive.
pub fn count_universal_with_lookups(n: usize, k: usize, sigma: usize) -> Result<(BigCount, u64)> {
    if sigma == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let powers = powers_of(sigma, n);
    if k == 0 {
        return Ok((powers[n].clone(), 0));
    }
    let mut filler = LayerFiller {
        n,
        sigma,
        powers: &powers,
        lookups: 0,
    };
    let mut prev: Option<Vec<BigCount>> = None;
    for c in 1..=k {
        let layer = filler.fill(c, prev.as_deref());
        prev = Some(layer);
    }
    let top = prev.expect("k >= 1");
    let count = match n.checked_sub(k * sigma) {
        Some(m) => top[m * (sigma + 1)].clone(),
        None => BigCount::zero(),
    };
    Ok((count, filler.lookups))
}

/// `|U(n, k, σ)|`: words of length `n` over `{1..σ}` with universality index at least `k`.
pub fn count_universal(n: usize, k: usize, sigma: usize) -> Result<BigCount> {
    count_universal_with_lookups(n, k, sigma).map(|(count, _)| count)
}

impl SuffixCountTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Table reads performed while filling.
    pub fn build_lookups(&self) -> u64 {
        self.build_lookups
    }

    /// Table reads performed by queries since construction.
    pub fn lookups(&self) -> u64 {
        self.lookups.load(Ordering::Relaxed)
    }

    fn tick(&self) {
        self.lookups.fetch_add(1, Ordering::Relaxed);
    }

    fn raw(&self, q: usize, m: usize, c: usize) -> &BigCount {
        if c == 0 {
            &self.powers[m]
        } else {
            let layer_len = (self.n + 1) * (self.sigma + 1);
            &self.layers[(c - 1) * layer_len + m * (self.sigma + 1) + q]
        }
    }

    /// Entry `(q, m, c)` of the table.
    pub fn entry(&self, q: usize, m: usize, c: usize) -> Result<&BigCount> {
        if q > self.sigma || m > self.n || c > self.k {
            return Err(Error::IndexOutOfRange { q, m, c });
        }
        self.tick();
        Ok(self.raw(q, m, c))
    }

    /// Members of `U(n, k, σ)` extending a prefix that has closed `closed`
    /// arches, has `open` distinct symbols in its open arch (`open < σ`) and
    /// leaves `remaining` positions to fill.
    pub fn completions(&self, closed: usize, open: usize, remaining: usize) -> &BigCount {
        debug_assert!(open < self.sigma && remaining <= self.n);
        self.tick();
        if closed >= self.k {
            return &self.powers[remaining];
        }
        let c = self.k - closed;
        let needed = (self.sigma - open) + self.sigma * (c - 1);
        match remaining.checked_sub(needed) {
            Some(m) => self.raw(open, m, c),
            None => &self.zero,
        }
    }

    /// `|U(n, k, σ)|`.
    pub fn total(&self) -> &BigCount {
        self.completions(0, 0, self.n)
    }
}

/// Suffixes that close `c` arches from an open arch holding `q` distinct
/// symbols while spending exactly `m` free symbols.
pub fn count_suffixes(table: &SuffixCountTable, q: usize, m: usize, c: usize) -> Result<&BigCount> {
    table.entry(q, m, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{count_one_universal, factorials};
    use num_traits::Pow;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    /// Counts words `prefix_len` symbols in with the given open-arch set,
    /// by enumerating every suffix directly.
    fn brute_suffixes(sigma: u32, seen: &[u32], len: usize, arches: usize) -> u64 {
        let mut count = 0;
        let total = (sigma as u64).pow(len as u32);
        for code in 0..total {
            let mut digits = Vec::with_capacity(len);
            let mut x = code;
            for _ in 0..len {
                digits.push((x % sigma as u64) as u32 + 1);
                x /= sigma as u64;
            }
            let mut open: Vec<u32> = seen.to_vec();
            let mut closed = 0;
            for &s in digits.iter().rev() {
                if !open.contains(&s) {
                    open.push(s);
                }
                if open.len() == sigma as usize {
                    closed += 1;
                    open.clear();
                }
            }
            if closed >= arches {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn worked_entries() {
        let t = build_table(8, 2, 2).unwrap();
        assert_eq!(t.entry(1, 0, 2).unwrap(), &big(2));
        assert_eq!(t.entry(1, 1, 1).unwrap(), &big(3));
        assert_eq!(
            t.entry(1, 1, 1).unwrap(),
            &big(brute_suffixes(2, &[1], 2, 1))
        );
        assert_eq!(t.entry(1, 1, 2).unwrap(), &big(8));
        assert_eq!(
            t.entry(1, 1, 2).unwrap(),
            &big(brute_suffixes(2, &[1], 4, 2))
        );
        let t3 = build_table(6, 1, 3).unwrap();
        assert_eq!(t3.entry(2, 5, 0).unwrap(), &big(243));
        assert_eq!(t3.entry(0, 5, 0).unwrap(), &big(243));
        assert_eq!(t3.entry(2, 0, 1).unwrap(), &big(1));
    }

    #[test]
    fn entries_match_suffix_enumeration() {
        for sigma in 1..=3u32 {
            let s = sigma as usize;
            let t = build_table(7, 3, s).unwrap();
            for c in 1..=3 {
                for q in 0..s {
                    for m in 0..=7 {
                        let len = m + (s - q) + s * (c - 1);
                        if len > 9 {
                            continue;
                        }
                        let seen: Vec<u32> = (1..=q as u32).collect();
                        assert_eq!(
                            t.entry(q, m, c).unwrap(),
                            &big(brute_suffixes(sigma, &seen, len, c)),
                            "σ={sigma} q={q} m={m} c={c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn base_cases() {
        for sigma in 1..=5usize {
            let k = 4;
            let t = build_table(10, k, sigma).unwrap();
            let fact = factorials(sigma);
            for c in 1..=k {
                for q in 0..=sigma {
                    let expected = &fact[sigma - q] * Pow::pow(&fact[sigma], (c - 1) as u32);
                    assert_eq!(t.entry(q, 0, c).unwrap(), &expected);
                }
            }
            for m in 0..=10 {
                assert_eq!(
                    t.entry(sigma, m, 0).unwrap(),
                    &Pow::pow(BigCount::from(sigma), m as u32)
                );
            }
            // fresh-arch state is σ times the one-symbol state
            for c in 1..=k {
                for m in 0..=10 {
                    assert_eq!(
                        t.entry(0, m, c).unwrap(),
                        &(t.entry(1, m, c).unwrap() * sigma)
                    );
                }
            }
        }
    }

    #[test]
    fn entry_bounds() {
        let t = build_table(4, 2, 2).unwrap();
        assert!(matches!(
            t.entry(3, 0, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            t.entry(0, 5, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            t.entry(0, 0, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(build_table(4, 2, 0), Err(Error::EmptyAlphabet)));
    }

    #[test]
    fn top_level_counts() {
        assert_eq!(count_universal(4, 2, 2).unwrap(), big(4));
        assert_eq!(count_universal(3, 1, 2).unwrap(), big(6));
        assert_eq!(count_universal(5, 2, 2).unwrap(), big(16));
        assert_eq!(count_universal(3, 2, 2).unwrap(), big(0));
        assert_eq!(count_universal(5, 0, 3).unwrap(), big(243));
        assert_eq!(count_universal(0, 0, 3).unwrap(), big(1));
        for sigma in 1..=5usize {
            for k in 0..=4usize {
                let fact = factorials(sigma);
                assert_eq!(
                    count_universal(k * sigma, k, sigma).unwrap(),
                    Pow::pow(&fact[sigma], k as u32)
                );
            }
        }
    }

    #[test]
    fn unary_alphabet() {
        for n in 0..12 {
            for k in 0..12 {
                let expected = big(u64::from(n >= k));
                assert_eq!(count_universal(n, k, 1).unwrap(), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn table_total_matches_rolling_count() {
        for sigma in 1..=4 {
            for n in 0..=12 {
                for k in 0..=4 {
                    let t = build_table(n, k, sigma).unwrap();
                    let (count, lookups) = count_universal_with_lookups(n, k, sigma).unwrap();
                    assert_eq!(t.total(), &count);
                    assert_eq!(t.build_lookups(), lookups);
                }
            }
        }
    }

    #[test]
    fn bounded_and_monotone_in_k() {
        for sigma in 1..=4usize {
            for n in 0..=16usize {
                let all = Pow::pow(BigCount::from(sigma), n as u32);
                let mut last = all.clone();
                for k in 0..=6 {
                    let c = count_universal(n, k, sigma).unwrap();
                    assert!(c <= last && c <= all);
                    last = c;
                }
            }
        }
    }

    #[test]
    fn one_universal_matches_closed_form() {
        for sigma in 1..=8usize {
            for n in 0..=30usize {
                assert_eq!(
                    count_universal(n, 1, sigma).unwrap(),
                    count_one_universal(n, sigma)
                );
            }
        }
    }
}
