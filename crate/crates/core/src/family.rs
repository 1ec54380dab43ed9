//! The seven word families, their membership tests and lexicographic enumerators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{avoids_all, is_walk, Pattern, Word};

/// Identifies one of the word families.
///
/// `P1*` families belong to the A007070 correspondence, `P2*` to A048739.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    /// Words in {1..4}^n avoiding 13 and 24.
    P1A,
    /// Unit-step words over {1..7} of length 2n+4 from 1 to 4.
    P1B,
    /// Unit-step words over {1..7} of length 2n+2 from 1, ending 2 or 6.
    P1C,
    /// Members of `P1A` ending 3 or 4.
    P1D,
    /// Words in {1..3}^n avoiding 13 and 1*3.
    P2A,
    /// Words in {1..3}^(n+3) from 1 to 3 avoiding 13 and 31.
    P2B,
    /// Words in {1..3}^(n+1) from 1 to 1 avoiding 13 and 31.
    P2GDom,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::P1A,
        FamilyId::P1B,
        FamilyId::P1C,
        FamilyId::P1D,
        FamilyId::P2A,
        FamilyId::P2B,
        FamilyId::P2GDom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::P1A => "p1a",
            FamilyId::P1B => "p1b",
            FamilyId::P1C => "p1c",
            FamilyId::P1D => "p1d",
            FamilyId::P2A => "p2a",
            FamilyId::P2B => "p2b",
            FamilyId::P2GDom => "p2gdom",
        }
    }

    pub fn spec(self) -> FamilySpec {
        let lit = Pattern::literal;
        match self {
            FamilyId::P1A => FamilySpec {
                alphabet: 4,
                length_scale: 1,
                length_offset: 0,
                min_n: 1,
                first_letter: None,
                last_letters: None,
                walk: false,
                forbidden: vec![lit(&[1, 3]), lit(&[2, 4])],
            },
            FamilyId::P1B => FamilySpec {
                alphabet: 7,
                length_scale: 2,
                length_offset: 4,
                min_n: 1,
                first_letter: Some(1),
                last_letters: Some(vec![4]),
                walk: true,
                forbidden: vec![],
            },
            FamilyId::P1C => FamilySpec {
                alphabet: 7,
                length_scale: 2,
                length_offset: 2,
                min_n: 1,
                first_letter: Some(1),
                last_letters: Some(vec![2, 6]),
                walk: true,
                forbidden: vec![],
            },
            FamilyId::P1D => FamilySpec {
                last_letters: Some(vec![3, 4]),
                ..FamilyId::P1A.spec()
            },
            FamilyId::P2A => FamilySpec {
                alphabet: 3,
                length_scale: 1,
                length_offset: 0,
                min_n: 0,
                first_letter: None,
                last_letters: None,
                walk: false,
                forbidden: vec![lit(&[1, 3]), "1*3".parse().expect("static pattern")],
            },
            FamilyId::P2B => FamilySpec {
                alphabet: 3,
                length_scale: 1,
                length_offset: 3,
                min_n: 0,
                first_letter: Some(1),
                last_letters: Some(vec![3]),
                walk: false,
                forbidden: vec![lit(&[1, 3]), lit(&[3, 1])],
            },
            FamilyId::P2GDom => FamilySpec {
                alphabet: 3,
                length_scale: 1,
                length_offset: 1,
                min_n: 1,
                first_letter: Some(1),
                last_letters: Some(vec![1]),
                walk: false,
                forbidden: vec![lit(&[1, 3]), lit(&[3, 1])],
            },
        }
    }

    /// Parameter `n` for a word of the given length, if the length fits this family.
    pub fn n_for_length(self, len: usize) -> Option<usize> {
        let s = self.spec();
        let rest = len.checked_sub(s.length_offset)?;
        (rest % s.length_scale == 0)
            .then(|| rest / s.length_scale)
            .filter(|&n| n >= s.min_n)
    }

    pub fn check_n(self, n: usize) -> Result<()> {
        let min = self.spec().min_n;
        if n < min {
            return Err(Error::ParameterOutOfRange {
                what: self.name().to_string(),
                n,
                min,
            });
        }
        Ok(())
    }

    pub fn membership(self, n: usize, word: &Word) -> Result<bool> {
        self.check_n(n)?;
        Ok(self.spec().accepts(n, word))
    }

    pub fn enumerate(self, n: usize) -> Result<Vec<Word>> {
        self.check_n(n)?;
        Ok(self.spec().enumerate(n))
    }

    pub fn family_size(self, n: usize) -> Result<usize> {
        self.enumerate(n).map(|v| v.len())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Declarative constraints defining a family at each parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub alphabet: u8,
    /// Word length is `length_scale * n + length_offset`.
    pub length_scale: usize,
    pub length_offset: usize,
    pub min_n: usize,
    pub first_letter: Option<u8>,
    pub last_letters: Option<Vec<u8>>,
    pub walk: bool,
    pub forbidden: Vec<Pattern>,
}

impl FamilySpec {
    pub fn length(&self, n: usize) -> usize {
        self.length_scale * n + self.length_offset
    }

    /// Membership without the `n` range check.
    pub fn accepts(&self, n: usize, word: &Word) -> bool {
        let l = word.letters();
        l.len() == self.length(n)
            && l.iter().all(|&c| (1..=self.alphabet).contains(&c))
            && self.first_letter.is_none_or(|f| word.first() == Some(f))
            && self
                .last_letters
                .as_ref()
                .is_none_or(|ls| word.last().is_some_and(|c| ls.contains(&c)))
            && (!self.walk || is_walk(word, self.alphabet))
            && avoids_all(word, &self.forbidden)
    }

    /// Whether appending `next` to `prefix` keeps every local constraint.
    pub(crate) fn step_allowed(&self, prefix: &[u8], next: u8) -> bool {
        match prefix.last() {
            None => {
                if self.first_letter.is_some_and(|f| f != next) {
                    return false;
                }
            }
            Some(&prev) => {
                if self.walk && prev.abs_diff(next) != 1 {
                    return false;
                }
            }
        }
        if self.forbidden.is_empty() {
            return true;
        }
        let mut buf = [0u8; 16];
        let keep = prefix.len().min(buf.len() - 1);
        buf[..keep].copy_from_slice(&prefix[prefix.len() - keep..]);
        buf[keep] = next;
        let window = &buf[..=keep];
        !self.forbidden.iter().any(|p| p.matches_suffix(window))
    }

    /// Letters adjacent to `a` under the local two-letter constraints.
    fn neighbours(&self, a: u8) -> u16 {
        (1..=self.alphabet)
            .filter(|&b| {
                (!self.walk || a.abs_diff(b) == 1)
                    && !self
                        .forbidden
                        .iter()
                        .any(|p| p.len() == 2 && p.matches_suffix(&[a, b]))
            })
            .fold(0, |m, b| m | (1 << b))
    }

    /// `reach[r][a]`: bitmask of letters reachable from `a` in exactly `r` steps.
    ///
    /// Only two-letter constraints are taken into account, so this over-approximates
    /// what is reachable; it is used for pruning, never for acceptance.
    fn reach_table(&self, max_steps: usize) -> Vec<[u16; 10]> {
        let adj: Vec<u16> = (0..=9u8)
            .map(|a| if (1..=self.alphabet).contains(&a) { self.neighbours(a) } else { 0 })
            .collect();
        let mut table = Vec::with_capacity(max_steps + 1);
        let mut cur = [0u16; 10];
        for a in 1..=self.alphabet {
            cur[a as usize] = 1 << a;
        }
        table.push(cur);
        for _ in 0..max_steps {
            let mut next = [0u16; 10];
            for a in 1..=self.alphabet as usize {
                next[a] = (1..=self.alphabet as usize)
                    .filter(|&b| cur[a] & (1 << b) != 0)
                    .fold(0, |m, b| m | adj[b]);
            }
            table.push(next);
            cur = next;
        }
        table
    }

    /// All members at `n` in increasing lexicographic order.
    pub fn enumerate(&self, n: usize) -> Vec<Word> {
        let len = self.length(n);
        let target: u16 = match &self.last_letters {
            Some(ls) => ls.iter().fold(0, |m, &l| m | (1 << l)),
            None => u16::MAX,
        };
        let reach = self.reach_table(len);
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(len);
        self.extend(&mut buf, len, target, &reach, &mut out);
        out
    }

    fn extend(&self, buf: &mut Vec<u8>, len: usize, target: u16, reach: &[[u16; 10]], out: &mut Vec<Word>) {
        if buf.len() == len {
            let ok = match buf.last() {
                Some(&c) => target & (1 << c) != 0,
                None => self.last_letters.is_none(),
            };
            if ok {
                out.push(Word::from_letters(buf.clone()).expect("letters in range"));
            }
            return;
        }
        for c in 1..=self.alphabet {
            if !self.step_allowed(buf, c) {
                continue;
            }
            let remaining = len - buf.len() - 1;
            if reach[remaining][c as usize] & target == 0 {
                continue;
            }
            buf.push(c);
            self.extend(buf, len, target, reach, out);
            buf.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn membership_examples() {
        assert!(FamilyId::P1B.membership(1, &w("121234")).unwrap());
        assert!(FamilyId::P2B.membership(0, &w("123")).unwrap());
        assert!(!FamilyId::P1A.membership(2, &w("13")).unwrap());
        assert!(!FamilyId::P1B.membership(1, &w("123254")).unwrap());
        assert!(!FamilyId::P1B.membership(2, &w("121234")).unwrap());
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            FamilyId::P1A.membership(0, &Word::empty()),
            Err(Error::ParameterOutOfRange { n: 0, min: 1, .. })
        ));
        assert!(FamilyId::P2GDom.enumerate(0).is_err());
        assert!(FamilyId::P2A.enumerate(0).is_ok());
    }

    #[test]
    fn enumerate_examples() {
        let b1: Vec<_> = ["121234", "123234", "123434", "123454"].map(w).into();
        assert_eq!(FamilyId::P1B.enumerate(1).unwrap(), b1);
        assert_eq!(
            FamilyId::P2B.enumerate(1).unwrap(),
            vec![w("1123"), w("1223"), w("1233")]
        );
        assert_eq!(FamilyId::P2GDom.enumerate(1).unwrap(), vec![w("11")]);
        assert_eq!(FamilyId::P2A.enumerate(0).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn size_examples() {
        assert_eq!(FamilyId::P1A.family_size(2).unwrap(), 14);
        assert_eq!(FamilyId::P1B.family_size(2).unwrap(), 14);
        let b2: Vec<_> = ["11123", "11223", "11233", "12123", "12223", "12233", "12323", "12333"]
            .map(w)
            .into();
        assert_eq!(FamilyId::P2B.enumerate(2).unwrap(), b2);
    }

    #[test]
    fn n_from_length() {
        assert_eq!(FamilyId::P1B.n_for_length(6), Some(1));
        assert_eq!(FamilyId::P1B.n_for_length(7), None);
        assert_eq!(FamilyId::P1B.n_for_length(4), None);
        assert_eq!(FamilyId::P2B.n_for_length(3), Some(0));
        assert_eq!(FamilyId::P2GDom.n_for_length(1), None);
        assert_eq!(FamilyId::P1A.n_for_length(0), None);
    }

    #[test]
    fn ids_round_trip() {
        for id in FamilyId::ALL {
            assert_eq!(id.name().parse::<FamilyId>().unwrap(), id);
        }
        assert!("p3a".parse::<FamilyId>().is_err());
    }
}
