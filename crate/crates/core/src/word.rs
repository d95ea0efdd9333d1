//! Input words over a dense alphabet.
//!
//! Symbols are renamed to `1..=sigma` in order of first occurrence, so the
//! alphabet of a word is always exactly the set of letters it contains.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A letter of the renamed alphabet, always in `1..=sigma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn new(value: u32) -> Option<Letter> {
        (value >= 1).then_some(Letter(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn from_idx(a: usize) -> Letter {
        debug_assert!(a >= 1);
        Letter(a as u32)
    }

    #[inline]
    pub(crate) fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How raw input is split into symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphabetMode {
    /// Every byte is a symbol.
    Bytes,
    /// Whitespace separated positive integers.
    Ints,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    // text[0] is padding so that positions are 1-based.
    text: Vec<Letter>,
    symbols: Vec<u64>,
    mode: AlphabetMode,
}

impl Word {
    /// Parses raw input. In bytes mode a single trailing line break is dropped.
    pub fn parse(raw: &[u8], mode: AlphabetMode) -> Result<Word> {
        match mode {
            AlphabetMode::Bytes => {
                let raw = raw.strip_suffix(b"\n").unwrap_or(raw);
                let raw = raw.strip_suffix(b"\r").unwrap_or(raw);
                Word::from_symbols(raw.iter().map(|&b| b as u64), mode)
            }
            AlphabetMode::Ints => {
                let text = std::str::from_utf8(raw).map_err(|e| Error::InvalidSymbol {
                    token: 1 + raw[..e.valid_up_to()].split(|b| b.is_ascii_whitespace()).count(),
                    symbol: String::from_utf8_lossy(&raw[e.valid_up_to()..]).chars().take(8).collect(),
                })?;
                let mut symbols = Vec::new();
                for (t, tok) in text.split_ascii_whitespace().enumerate() {
                    let v = tok
                        .parse::<u64>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::InvalidSymbol { token: t + 1, symbol: tok.to_string() })?;
                    symbols.push(v);
                }
                Word::from_symbols(symbols, mode)
            }
        }
    }

    pub fn from_symbols<I: IntoIterator<Item = u64>>(symbols: I, mode: AlphabetMode) -> Result<Word> {
        let mut table: HashMap<u64, Letter> = HashMap::new();
        let mut order = Vec::new();
        let mut text = vec![Letter(0)];
        for s in symbols {
            let next = Letter(order.len() as u32 + 1);
            let l = *table.entry(s).or_insert_with(|| {
                order.push(s);
                next
            });
            text.push(l);
        }
        if text.len() == 1 {
            return Err(Error::EmptyInput);
        }
        Ok(Word { text, symbols: order, mode })
    }

    /// Convenience for byte strings such as `"1223313"`.
    pub fn from_str_bytes(s: &str) -> Result<Word> {
        Word::parse(s.as_bytes(), AlphabetMode::Bytes)
    }

    pub fn len(&self) -> usize {
        self.text.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sigma(&self) -> usize {
        self.symbols.len()
    }

    pub fn mode(&self) -> AlphabetMode {
        self.mode
    }

    /// Letter at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> Letter {
        self.text[i]
    }

    pub fn letters(&self) -> &[Letter] {
        &self.text[1..]
    }

    /// Original symbol of each letter, indexed by `letter - 1`.
    pub fn symbols(&self) -> &[u64] {
        &self.symbols
    }

    /// Maps pattern symbols to letters of this word.
    pub fn encode(&self, symbols: &[u64]) -> Result<Vec<Letter>> {
        symbols
            .iter()
            .enumerate()
            .map(|(index, s)| {
                self.symbols
                    .iter()
                    .position(|x| x == s)
                    .map(|p| Letter(p as u32 + 1))
                    .ok_or(Error::AlphabetMismatch { index })
            })
            .collect()
    }

    /// Parses a pattern with the same alphabet mode and maps it to letters.
    pub fn parse_pattern(&self, raw: &[u8]) -> Result<Vec<Letter>> {
        let symbols: Vec<u64> = match self.mode {
            AlphabetMode::Bytes => {
                let raw = raw.strip_suffix(b"\n").unwrap_or(raw);
                raw.iter().map(|&b| b as u64).collect()
            }
            AlphabetMode::Ints => {
                let text = std::str::from_utf8(raw).map_err(|_| Error::InvalidSymbol {
                    token: 1,
                    symbol: String::from_utf8_lossy(raw).into_owned(),
                })?;
                let mut out = Vec::new();
                for (t, tok) in text.split_ascii_whitespace().enumerate() {
                    out.push(
                        tok.parse::<u64>()
                            .map_err(|_| Error::InvalidSymbol { token: t + 1, symbol: tok.to_string() })?,
                    );
                }
                out
            }
        };
        self.encode(&symbols)
    }

    /// Renders letters back into the original symbols.
    pub fn render(&self, letters: &[Letter]) -> Vec<u8> {
        match self.mode {
            AlphabetMode::Bytes => letters.iter().map(|l| self.symbols[l.idx() - 1] as u8).collect(),
            AlphabetMode::Ints => {
                let parts: Vec<String> = letters.iter().map(|l| self.symbols[l.idx() - 1].to_string()).collect();
                parts.join(" ").into_bytes()
            }
        }
    }

    pub fn render_string(&self, letters: &[Letter]) -> String {
        String::from_utf8_lossy(&self.render(letters)).into_owned()
    }
}
