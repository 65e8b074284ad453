//! Finite words over small integer alphabets.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A letter, identified by its index in the alphabet.
pub type Symbol = u8;

/// A finite word: a dense sequence of symbol indices together with the size
/// of the alphabet it is drawn from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > Symbol::MAX as usize + 1 {
            return Err(Error::parameter(format!(
                "alphabet size {alphabet_size} out of range"
            )));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s as usize >= alphabet_size) {
            return Err(Error::parameter(format!(
                "symbol {bad} outside alphabet of size {alphabet_size}"
            )));
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Builds a binary word; panics if a symbol is not 0 or 1.
    pub fn binary(symbols: impl Into<Vec<Symbol>>) -> Self {
        let symbols = symbols.into();
        assert!(symbols.iter().all(|&s| s < 2), "non-binary symbol");
        Word {
            symbols,
            alphabet_size: 2,
        }
    }

    pub(crate) fn from_parts_unchecked(symbols: Vec<Symbol>, alphabet_size: usize) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as usize) < alphabet_size));
        Word {
            symbols,
            alphabet_size,
        }
    }

    pub fn empty(alphabet_size: usize) -> Self {
        Word {
            symbols: Vec::new(),
            alphabet_size,
        }
    }

    /// Parses a textual word. Plain digit strings map each digit to a symbol;
    /// words containing a comma are read as comma-separated indices. The
    /// alphabet is the smallest one (at least binary) containing every symbol.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let symbols: Vec<Symbol> = if text.contains(',') {
            text.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<Symbol>()
                        .map_err(|e| Error::parse("word", text, e.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Symbol)
                        .ok_or_else(|| Error::parse("word", text, format!("unexpected {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        let alphabet_size = symbols.iter().map(|&s| s as usize + 1).max().unwrap_or(0).max(2);
        Word::new(symbols, alphabet_size)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet_size <= 2
    }

    /// The first `n` symbols, or the whole word if it is shorter.
    pub fn prefix(&self, n: usize) -> Word {
        Word {
            symbols: self.symbols[..n.min(self.len())].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word {
            symbols: self.symbols[start..start + len].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn with_alphabet(mut self, alphabet_size: usize) -> Result<Self> {
        if alphabet_size < self.alphabet_size
            && self.symbols.iter().any(|&s| s as usize >= alphabet_size)
        {
            return Err(Error::parameter("word does not fit the smaller alphabet"));
        }
        self.alphabet_size = alphabet_size;
        Ok(self)
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.symbols
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.symbols, self.alphabet_size)
    }
}

/// Digit strings for alphabets of at most ten letters, comma-separated
/// indices otherwise.
pub(crate) fn write_symbols(
    f: &mut impl fmt::Write,
    symbols: &[Symbol],
    alphabet_size: usize,
) -> fmt::Result {
    if alphabet_size <= 10 {
        for &s in symbols {
            f.write_char((b'0' + s) as char)?;
        }
        Ok(())
    } else {
        for (i, s) in symbols.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_digits_and_commas() {
        let w = Word::parse("0110").unwrap();
        assert_eq!(w.symbols(), &[0, 1, 1, 0]);
        assert_eq!(w.alphabet_size(), 2);

        let w = Word::parse("0,11,3").unwrap();
        assert_eq!(w.symbols(), &[0, 11, 3]);
        assert_eq!(w.alphabet_size(), 12);
        assert_eq!(w.to_string(), "0,11,3");

        assert_eq!(Word::parse("").unwrap().len(), 0);
        assert!(Word::parse("01a").is_err());
    }

    #[test]
    fn rejects_symbols_outside_alphabet() {
        assert!(Word::new(vec![0, 2], 2).is_err());
        assert!(Word::new(vec![], 0).is_err());
    }

    #[test]
    fn display_round_trips() {
        let w = Word::binary(vec![0, 1, 0, 0]);
        assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }
}
