//! Letters, words, factor patterns with single-letter wildcards, and walk checks.
//!
//! Letters are small positive integers rendered as single decimal digits, so a
//! word such as `123454` reads the same in code, on the command line and in
//! reports. The empty word prints as `ε`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest letter expressible in the digit text format.
pub const MAX_LETTER: u8 = 9;

/// Rendering of the empty word in human-readable output.
pub const EMPTY_WORD_GLYPH: &str = "ε";

/// A finite word over the alphabet `{1, .., k}`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw letters, rejecting anything outside `1..=9`.
    pub fn from_letters(letters: impl Into<Vec<u8>>) -> Result<Self> {
        let letters = letters.into();
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > MAX_LETTER) {
            return Err(Error::InvalidLetter(char::from(b'0' + bad.min(9))));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    /// The last `m` letters.
    pub fn suffix(&self, m: usize) -> Result<Word> {
        let len = self.len();
        if m > len {
            return Err(Error::SuffixOutOfRange { m, len });
        }
        Ok(Word(self.0[len - m..].to_vec()))
    }

    /// The word with its last `m` letters removed.
    pub fn drop_suffix(&self, m: usize) -> Result<Word> {
        let len = self.len();
        if m > len {
            return Err(Error::SuffixOutOfRange { m, len });
        }
        Ok(Word(self.0[..len - m].to_vec()))
    }

    /// Whether the word ends with the given letters.
    pub fn ends_with(&self, tail: &[u8]) -> bool {
        self.0.ends_with(tail)
    }

    /// Copy of `self` with `tail` appended.
    pub fn with(&self, tail: &[u8]) -> Word {
        let mut v = Vec::with_capacity(self.len() + tail.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(tail);
        Word(v)
    }

    pub fn push(&mut self, letter: u8) {
        debug_assert!((1..=MAX_LETTER).contains(&letter));
        self.0.push(letter);
    }

    pub fn pop(&mut self) -> Option<u8> {
        self.0.pop()
    }

    /// Machine format: plain digits, empty string for the empty word.
    pub fn to_digits(&self) -> String {
        self.0.iter().map(|&l| char::from(b'0' + l)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str(EMPTY_WORD_GLYPH)
        } else {
            f.write_str(&self.to_digits())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts a digit string; `""`, `ε` and `λ` all denote the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == EMPTY_WORD_GLYPH || s == "λ" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c.to_digit(10) {
                Some(d @ 1..=9) => Ok(d as u8),
                _ => Err(Error::InvalidLetter(c)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_digits()
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

/// Shorthand for word literals in code and tests. Panics on bad input.
pub fn w(s: &str) -> Word {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}

/// One position of a factor pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Letter(u8),
    /// Matches exactly one letter, whatever it is.
    Any,
}

impl Atom {
    fn matches(self, letter: u8) -> bool {
        match self {
            Atom::Letter(l) => l == letter,
            Atom::Any => true,
        }
    }
}

/// A contiguous factor to be matched against words, e.g. `13` or `1*3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<Atom>);

impl Pattern {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidPattern(String::new()));
        }
        Ok(Pattern(atoms))
    }

    /// A pattern made only of literal letters.
    pub fn literal(letters: &[u8]) -> Self {
        assert!(!letters.is_empty(), "empty pattern");
        Pattern(letters.iter().map(|&l| Atom::Letter(l)).collect())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn matches_window(&self, window: &[u8]) -> bool {
        window.len() == self.0.len() && self.0.iter().zip(window).all(|(a, &l)| a.matches(l))
    }

    /// Whether the pattern occurs as a factor ending at the last letter.
    pub fn matches_suffix(&self, letters: &[u8]) -> bool {
        letters.len() >= self.len() && self.matches_window(&letters[letters.len() - self.len()..])
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Digits are literal letters; `*`, `.` or `s` is the wildcard.
    fn from_str(s: &str) -> Result<Self> {
        let atoms = s
            .chars()
            .map(|c| match c {
                '*' | '.' | 's' => Ok(Atom::Any),
                _ => match c.to_digit(10) {
                    Some(d @ 1..=9) => Ok(Atom::Letter(d as u8)),
                    _ => Err(Error::InvalidPattern(s.to_string())),
                },
            })
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(atoms).map_err(|_| Error::InvalidPattern(s.to_string()))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.0 {
            match a {
                Atom::Letter(l) => write!(f, "{l}")?,
                Atom::Any => f.write_str("*")?,
            }
        }
        Ok(())
    }
}

/// True iff some contiguous window of `word` matches `pattern`.
pub fn contains_factor(word: &Word, pattern: &Pattern) -> bool {
    word.letters()
        .windows(pattern.len())
        .any(|win| pattern.matches_window(win))
}

pub fn avoids_all(word: &Word, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|p| !contains_factor(word, p))
}

/// True iff every letter lies in `1..=max_letter` and neighbours differ by exactly one.
pub fn is_walk(word: &Word, max_letter: u8) -> bool {
    let l = word.letters();
    l.iter().all(|&c| (1..=max_letter).contains(&c)) && l.windows(2).all(|p| p[0].abs_diff(p[1]) == 1)
}
