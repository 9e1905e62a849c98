use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol inside its [`Alphabet`].
pub type Letter = usize;

/// Ordered set of single-character symbols.
///
/// Words are handled internally as slices of [`Letter`] indices; the alphabet
/// converts between those and plain strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        for (i, &c) in symbols.iter().enumerate() {
            if !c.is_ascii_graphic() {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol {c:?} is not printable ASCII"
                )));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{c}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Convenience for tests and fixed automata: `Alphabet::from_symbols("ab")`.
    pub fn from_symbols(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter]
    }

    pub fn letter(&self, c: char) -> Option<Letter> {
        self.symbols.iter().position(|&s| s == c)
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }

    pub fn encode(&self, word: &str) -> Result<Vec<Letter>> {
        word.chars()
            .map(|c| {
                self.letter(c)
                    .ok_or(Error::UnknownSymbol { symbol: c, line: None })
            })
            .collect()
    }

    pub fn decode(&self, word: &[Letter]) -> String {
        word.iter().map(|&l| self.symbols[l]).collect()
    }

    /// All words of exactly `len` letters, in lexicographic order of the
    /// alphabet's declaration order.
    pub fn words_of_length(&self, len: usize) -> WordsOfLength {
        WordsOfLength {
            base: self.len(),
            current: if self.is_empty() && len > 0 {
                None
            } else {
                Some(vec![0; len])
            },
        }
    }

    /// All words of length `0..=max_len`, shortest first, then lexicographic.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Vec<Letter>> + '_ {
        (0..=max_len).flat_map(move |n| self.words_of_length(n))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Odometer over `base^len` words.
pub struct WordsOfLength {
    base: usize,
    current: Option<Vec<Letter>>,
}

impl Iterator for WordsOfLength {
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        let mut carried = true;
        while carried && i > 0 {
            i -= 1;
            next[i] += 1;
            if next[i] == self.base {
                next[i] = 0;
            } else {
                carried = false;
            }
        }
        if !carried {
            self.current = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_whitespace() {
        assert!(Alphabet::from_symbols("aba").is_err());
        assert!(Alphabet::from_symbols("a b").is_err());
        assert!(Alphabet::from_symbols("ab").is_ok());
    }

    #[test]
    fn word_enumeration_counts() {
        let ab = Alphabet::from_symbols("ab").unwrap();
        assert_eq!(ab.words_up_to(6).count(), 127);
        let len2: Vec<String> = ab.words_of_length(2).map(|w| ab.decode(&w)).collect();
        assert_eq!(len2, ["aa", "ab", "ba", "bb"]);
        assert_eq!(ab.words_of_length(0).count(), 1);
    }

    #[test]
    fn encode_rejects_foreign_symbols() {
        let ab = Alphabet::from_symbols("ab").unwrap();
        assert_eq!(
            ab.encode("abc"),
            Err(Error::UnknownSymbol { symbol: 'c', line: None })
        );
        assert_eq!(ab.decode(&ab.encode("abba").unwrap()), "abba");
    }
}
