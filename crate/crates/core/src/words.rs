//! Words over `{1..σ}`, lexicographic comparison and the text format.
//!
//! Symbols are 1-based everywhere in the public interface. The text format
//! depends on the alphabet size: for `σ <= 9` a word is written as a run of
//! digits (`"1212"`), otherwise as comma-separated decimals (`"10,2,10"`).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Alphabet `{1..σ}`, identified by its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u32);

impl Alphabet {
    pub fn new(sigma: u32) -> Result<Self> {
        if sigma == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet(sigma))
    }

    pub fn size(self) -> u32 {
        self.0
    }

    pub fn contains(self, symbol: u32) -> bool {
        (1..=self.0).contains(&symbol)
    }

    /// Whether words over this alphabet use the compact digit format.
    pub fn uses_digits(self) -> bool {
        self.0 <= 9
    }
}

/// An immutable, validated word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u32>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(symbols: Vec<u32>, alphabet: Alphabet) -> Result<Self> {
        if let Some((i, &s)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| !alphabet.contains(s))
        {
            return Err(Error::SymbolOutOfRange {
                position: i + 1,
                value: u64::from(s),
            });
        }
        Ok(Word { symbols, alphabet })
    }

    /// Builds a word without validation. Callers guarantee every symbol is in range.
    pub(crate) fn from_trusted(symbols: Vec<u32>, alphabet: Alphabet) -> Self {
        debug_assert!(symbols.iter().all(|&s| alphabet.contains(s)));
        Word { symbols, alphabet }
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn sigma(&self) -> u32 {
        self.alphabet.0
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.symbols[i - 1]
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.symbols, self.alphabet))
    }
}

pub fn make_word(symbols: Vec<u32>, sigma: u32) -> Result<Word> {
    Word::new(symbols, Alphabet::new(sigma)?)
}

/// Lexicographic order on words of equal length over the same alphabet.
pub fn lex_compare(w: &Word, v: &Word) -> Result<Ordering> {
    if w.alphabet != v.alphabet {
        return Err(Error::AlphabetMismatch {
            left: w.sigma(),
            right: v.sigma(),
        });
    }
    if w.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: v.len(),
        });
    }
    Ok(w.symbols.cmp(&v.symbols))
}

pub fn parse_word(text: &str, sigma: u32) -> Result<Word> {
    let alphabet = Alphabet::new(sigma)?;
    let symbols = if alphabet.uses_digits() && !text.contains(',') {
        parse_digits(text)?
    } else {
        parse_comma_list(text)?
    };
    Word::new(symbols, alphabet)
}

fn parse_digits(text: &str) -> Result<Vec<u32>> {
    text.chars()
        .enumerate()
        .map(|(i, ch)| {
            ch.to_digit(10).ok_or_else(|| Error::Parse {
                position: i + 1,
                reason: format!("unexpected character {ch:?}"),
            })
        })
        .collect()
}

fn parse_comma_list(text: &str) -> Result<Vec<u32>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut symbols = Vec::new();
    let mut offset = 0;
    for field in text.split(',') {
        let position = offset + 1;
        if field.is_empty() {
            return Err(Error::Parse {
                position,
                reason: "empty field".into(),
            });
        }
        if let Some((i, ch)) = field.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            return Err(Error::Parse {
                position: offset + i + 1,
                reason: format!("unexpected character {ch:?}"),
            });
        }
        let value: u64 = field.parse().map_err(|_| Error::Parse {
            position,
            reason: "number too large".into(),
        })?;
        let value = u32::try_from(value).map_err(|_| Error::SymbolOutOfRange {
            position: symbols.len() + 1,
            value,
        })?;
        symbols.push(value);
        offset += field.len() + 1;
    }
    Ok(symbols)
}

pub fn format_word(w: &Word) -> String {
    format_symbols(&w.symbols, w.alphabet)
}

/// Formats a slice of symbols in the canonical format for `alphabet`.
pub fn format_symbols(symbols: &[u32], alphabet: Alphabet) -> String {
    if alphabet.uses_digits() {
        symbols
            .iter()
            .map(|&s| char::from_digit(s, 10).expect("digit symbol"))
            .collect()
    } else {
        symbols
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// A subset of `{1..σ}` stored as a bit vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolSet {
    bits: Vec<u64>,
    len: usize,
}

impl SymbolSet {
    pub fn new(sigma: u32) -> Self {
        SymbolSet {
            bits: vec![0; (sigma as usize).div_ceil(64)],
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, symbol: u32) -> bool {
        let i = (symbol - 1) as usize;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Inserts `symbol`, returning whether it was absent.
    pub fn insert(&mut self, symbol: u32) -> bool {
        let i = (symbol - 1) as usize;
        let mask = 1u64 << (i % 64);
        let fresh = self.bits[i / 64] & mask == 0;
        if fresh {
            self.bits[i / 64] |= mask;
            self.len += 1;
        }
        fresh
    }

    pub fn clear(&mut self) {
        self.bits.iter_mut().for_each(|b| *b = 0);
        self.len = 0;
    }

    /// Number of members strictly smaller than `symbol`.
    pub fn count_below(&self, symbol: u32) -> usize {
        let i = (symbol - 1) as usize;
        let full = self.bits[..i / 64]
            .iter()
            .map(|b| b.count_ones() as usize)
            .sum::<usize>();
        let partial = match i % 64 {
            0 => 0,
            r => (self.bits[i / 64] & ((1u64 << r) - 1)).count_ones() as usize,
        };
        full + partial
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter().enumerate().flat_map(|(word, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| (word * 64 + b + 1) as u32)
        })
    }
}
