//! Walks from 1 to 4 on the path 1..7 versus words over {1..4} avoiding 13 and 24.
//!
//! `f` maps `P1B` (length 2n+4) onto `P1A` (length n), and the auxiliary `g`
//! maps `P1C` (length 2n+2, ending 2 or 6) onto `P1D` (`P1A` words ending 3
//! or 4). Both are given by explicit tables for n <= 2 and by suffix rules
//! above that; the rules for one map call the other on shorter words.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::word::{w, Word};

/// Values of `f` on B1 and B2 and of `g` on C1 and C2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseTablesP1 {
    pub f: BTreeMap<Word, Word>,
    pub g: BTreeMap<Word, Word>,
}

/// The fixed base tables.
///
/// `f` on B2 is only pinned down up to its three ending classes; within each
/// class the domain words and the image words are paired in lexicographic order.
pub fn build_base_tables_p1() -> BaseTablesP1 {
    let g = [
        ("1212", "3"),
        ("1232", "4"),
        ("121212", "23"),
        ("121232", "33"),
        ("123212", "43"),
        ("123232", "14"),
        ("123456", "34"),
        ("123432", "44"),
    ];
    let mut f: BTreeMap<Word, Word> = [
        ("121234", "1"),
        ("123454", "2"),
        ("123234", "3"),
        ("123434", "4"),
    ]
    .into_iter()
    .map(|(a, b)| (w(a), w(b)))
    .collect();

    let b2 = FamilyId::P1B.enumerate(2).expect("n=2 in range");
    let a2 = FamilyId::P1A.enumerate(2).expect("n=2 in range");
    type Class = fn(&Word) -> bool;
    let classes: [(Class, Class); 3] = [
        (|x| x.ends_with(&[4, 3, 4]), |u| u.last() == Some(1)),
        (|x| x.ends_with(&[4, 5, 4]), |u| u.last() == Some(2)),
        (
            |x| !x.ends_with(&[4, 3, 4]) && !x.ends_with(&[4, 5, 4]),
            |u| matches!(u.last(), Some(3 | 4)),
        ),
    ];
    for (dom, img) in classes {
        let from = b2.iter().filter(|x| dom(x));
        let to = a2.iter().filter(|u| img(u));
        f.extend(from.cloned().zip(to.cloned()));
    }

    BaseTablesP1 {
        f,
        g: g.into_iter().map(|(a, b)| (w(a), w(b))).collect(),
    }
}

/// The pair of maps `f: P1B -> P1A` and `g: P1C -> P1D` with their inverses.
#[derive(Clone, Debug)]
pub struct P1Bijection {
    tables: BaseTablesP1,
    f_rev: BTreeMap<Word, Word>,
    g_rev: BTreeMap<Word, Word>,
}

impl Default for P1Bijection {
    fn default() -> Self {
        Self::with_tables(build_base_tables_p1())
    }
}

fn not_in(what: &str, word: &Word) -> Error {
    Error::NotInDomain {
        what: what.to_string(),
        word: word.to_string(),
    }
}

impl P1Bijection {
    /// Uses arbitrary base tables. Non-injective tables lose entries in the
    /// reverse lookup, which the inverses then report as domain errors.
    pub fn with_tables(tables: BaseTablesP1) -> Self {
        let rev = |m: &BTreeMap<Word, Word>| m.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        P1Bijection {
            f_rev: rev(&tables.f),
            g_rev: rev(&tables.g),
            tables,
        }
    }

    pub fn tables(&self) -> &BaseTablesP1 {
        &self.tables
    }

    pub fn f(&self, n: usize, word: &Word) -> Result<Word> {
        if !FamilyId::P1B.membership(n, word)? {
            return Err(not_in("p1f", word));
        }
        self.f_rec(n, word)
    }

    pub fn g(&self, n: usize, word: &Word) -> Result<Word> {
        if !FamilyId::P1C.membership(n, word)? {
            return Err(not_in("p1g", word));
        }
        self.g_rec(n, word)
    }

    pub fn f_inv(&self, u: &Word) -> Result<Word> {
        let n = u.len();
        if n == 0 || !FamilyId::P1A.membership(n, u)? {
            return Err(not_in("p1f inverse", u));
        }
        self.f_inv_rec(u)
    }

    pub fn g_inv(&self, u: &Word) -> Result<Word> {
        let n = u.len();
        if n == 0 || !FamilyId::P1D.membership(n, u)? {
            return Err(not_in("p1g inverse", u));
        }
        self.g_inv_rec(u)
    }

    // The recursive workers assume membership; structural surprises (only
    // reachable with corrupted tables) still surface as errors, never panics.

    fn f_rec(&self, n: usize, word: &Word) -> Result<Word> {
        if n <= 2 {
            return self.tables.f.get(word).cloned().ok_or_else(|| not_in("p1f base table", word));
        }
        let l = word.letters();
        let len = l.len();
        if word.at(2 * n + 2) == Some(4) {
            let head = word.drop_suffix(2)?;
            let tail = if l[len - 2] == 3 { 1 } else { 2 };
            return Ok(self.f_rec(n - 1, &head)?.with(&[tail]));
        }
        if word.at(2 * n) == Some(4) {
            let head = word.drop_suffix(4)?;
            let tail: &[u8] = if word.ends_with(&[3, 2, 3, 4]) { &[2, 3] } else { &[1, 4] };
            return Ok(self.f_rec(n - 2, &head)?.with(tail));
        }
        let x = word.drop_suffix(4)?;
        let tail = match &l[len - 4..] {
            [1, 2, 3, 4] | [5, 6, 5, 4] => 3,
            [3, 2, 3, 4] | [7, 6, 5, 4] => 4,
            _ => return Err(not_in("p1f", word)),
        };
        Ok(self.g_rec(n - 1, &x)?.with(&[tail]))
    }

    fn g_rec(&self, n: usize, word: &Word) -> Result<Word> {
        if n <= 2 {
            return self.tables.g.get(word).cloned().ok_or_else(|| not_in("p1g base table", word));
        }
        let x = word.drop_suffix(2)?;
        let tail = word.suffix(2)?;
        match (x.last(), tail.letters()) {
            (Some(4), [3, 2]) => Ok(self.f_rec(n - 2, &x)?.with(&[2, 3])),
            (Some(4), [5, 6]) => Ok(self.f_rec(n - 2, &x)?.with(&[1, 4])),
            (Some(2), [1, 2]) | (Some(6), [5, 6]) => Ok(self.g_rec(n - 1, &x)?.with(&[3])),
            (Some(2), [3, 2]) | (Some(6), [7, 6]) => Ok(self.g_rec(n - 1, &x)?.with(&[4])),
            _ => Err(not_in("p1g", word)),
        }
    }

    fn f_inv_rec(&self, u: &Word) -> Result<Word> {
        let n = u.len();
        if n <= 2 {
            return self.f_rev.get(u).cloned().ok_or_else(|| not_in("p1f base table", u));
        }
        let l = u.letters();
        let (pen, last) = (l[n - 2], l[n - 1]);
        match (pen, last) {
            (_, 1) => Ok(self.f_inv_rec(&u.drop_suffix(1)?)?.with(&[3, 4])),
            (_, 2) => Ok(self.f_inv_rec(&u.drop_suffix(1)?)?.with(&[5, 4])),
            (2, 3) => Ok(self.f_inv_rec(&u.drop_suffix(2)?)?.with(&[3, 2, 3, 4])),
            (1, 4) => Ok(self.f_inv_rec(&u.drop_suffix(2)?)?.with(&[5, 6, 5, 4])),
            (3 | 4, 3 | 4) => {
                let x = self.g_inv_rec(&u.drop_suffix(1)?)?;
                let tail: &[u8] = match (x.last(), last) {
                    (Some(2), 3) => &[1, 2, 3, 4],
                    (Some(2), _) => &[3, 2, 3, 4],
                    (_, 3) => &[5, 6, 5, 4],
                    _ => &[7, 6, 5, 4],
                };
                Ok(x.with(tail))
            }
            _ => Err(not_in("p1f inverse", u)),
        }
    }

    fn g_inv_rec(&self, u: &Word) -> Result<Word> {
        let n = u.len();
        if n <= 2 {
            return self.g_rev.get(u).cloned().ok_or_else(|| not_in("p1g base table", u));
        }
        let l = u.letters();
        let (pen, last) = (l[n - 2], l[n - 1]);
        match (pen, last) {
            (2, 3) => Ok(self.f_inv_rec(&u.drop_suffix(2)?)?.with(&[3, 2])),
            (1, 4) => Ok(self.f_inv_rec(&u.drop_suffix(2)?)?.with(&[5, 6])),
            (3 | 4, 3 | 4) => {
                let x = self.g_inv_rec(&u.drop_suffix(1)?)?;
                let tail: &[u8] = match (x.last(), last) {
                    (Some(2), 3) => &[1, 2],
                    (Some(2), _) => &[3, 2],
                    (_, 3) => &[5, 6],
                    _ => &[7, 6],
                };
                Ok(x.with(tail))
            }
            _ => Err(not_in("p1g inverse", u)),
        }
    }
}
