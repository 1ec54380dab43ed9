//! Words from 1 to 3 avoiding 13 and 31 versus words avoiding 13 and 1*3.
//!
//! `f` maps `P2B` (length n+3) onto `P2A` (length n); the auxiliary `g` maps
//! `P2GDom` (length n+1, from 1 to 1) onto the `P2A` words ending 3.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::word::{w, Word};

/// Values of `f` on B0 and B1 and of `g` on the domain at n = 1 and 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseTablesP2 {
    pub f: BTreeMap<Word, Word>,
    pub g: BTreeMap<Word, Word>,
}

pub fn build_base_tables_p2() -> BaseTablesP2 {
    let pairs = |xs: &[(&str, &str)]| xs.iter().map(|&(a, b)| (w(a), w(b))).collect();
    BaseTablesP2 {
        f: pairs(&[("123", ""), ("1123", "1"), ("1223", "2"), ("1233", "3")]),
        // n = 2 entries: the rule for ·21 would need g on the one-letter word 1.
        g: pairs(&[("11", "3"), ("111", "33"), ("121", "23")]),
    }
}

#[derive(Clone, Debug)]
pub struct P2Bijection {
    tables: BaseTablesP2,
    f_rev: BTreeMap<Word, Word>,
    g_rev: BTreeMap<Word, Word>,
}

impl Default for P2Bijection {
    fn default() -> Self {
        Self::with_tables(build_base_tables_p2())
    }
}

fn not_in(what: &str, word: &Word) -> Error {
    Error::NotInDomain {
        what: what.to_string(),
        word: word.to_string(),
    }
}

impl P2Bijection {
    pub fn with_tables(tables: BaseTablesP2) -> Self {
        let rev = |m: &BTreeMap<Word, Word>| m.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        P2Bijection {
            f_rev: rev(&tables.f),
            g_rev: rev(&tables.g),
            tables,
        }
    }

    pub fn tables(&self) -> &BaseTablesP2 {
        &self.tables
    }

    pub fn f(&self, n: usize, word: &Word) -> Result<Word> {
        if !FamilyId::P2B.membership(n, word)? {
            return Err(not_in("p2f", word));
        }
        self.f_rec(n, word)
    }

    pub fn g(&self, n: usize, word: &Word) -> Result<Word> {
        if !FamilyId::P2GDom.membership(n, word)? {
            return Err(not_in("p2g", word));
        }
        self.g_rec(n, word)
    }

    pub fn f_inv(&self, u: &Word) -> Result<Word> {
        if !FamilyId::P2A.membership(u.len(), u)? {
            return Err(not_in("p2f inverse", u));
        }
        self.f_inv_rec(u)
    }

    pub fn g_inv(&self, u: &Word) -> Result<Word> {
        let n = u.len();
        if n == 0 || u.last() != Some(3) || !FamilyId::P2A.membership(n, u)? {
            return Err(not_in("p2g inverse", u));
        }
        self.g_inv_rec(u)
    }

    fn f_rec(&self, n: usize, word: &Word) -> Result<Word> {
        if n <= 1 {
            return self.tables.f.get(word).cloned().ok_or_else(|| not_in("p2f base table", word));
        }
        let l = word.letters();
        let len = l.len();
        match (l[len - 3], l[len - 2]) {
            (_, 3) => Ok(self.f_rec(n - 1, &word.drop_suffix(1)?)?.with(&[1])),
            (2 | 3, 2) => {
                let y3 = word.drop_suffix(2)?.with(&[3]);
                Ok(self.f_rec(n - 1, &y3)?.with(&[2]))
            }
            (1, 2) => self.g_rec(n, &word.drop_suffix(2)?),
            _ => Err(not_in("p2f", word)),
        }
    }

    fn g_rec(&self, n: usize, word: &Word) -> Result<Word> {
        if n <= 2 {
            return self.tables.g.get(word).cloned().ok_or_else(|| not_in("p2g base table", word));
        }
        let l = word.letters();
        let len = l.len();
        match (l[len - 3], l[len - 2]) {
            (_, 1) => Ok(self.g_rec(n - 1, &word.drop_suffix(1)?)?.with(&[3])),
            (1, 2) => Ok(self.g_rec(n - 2, &word.drop_suffix(2)?)?.with(&[2, 3])),
            (2 | 3, 2) => {
                let z3 = word.drop_suffix(2)?.with(&[3]);
                Ok(self.f_rec(n - 3, &z3)?.with(&[2, 2, 3]))
            }
            _ => Err(not_in("p2g", word)),
        }
    }

    fn f_inv_rec(&self, u: &Word) -> Result<Word> {
        if u.len() <= 1 {
            return self.f_rev.get(u).cloned().ok_or_else(|| not_in("p2f base table", u));
        }
        match u.last() {
            Some(1) => Ok(self.f_inv_rec(&u.drop_suffix(1)?)?.with(&[3])),
            Some(2) => {
                let p = self.f_inv_rec(&u.drop_suffix(1)?)?;
                Ok(p.drop_suffix(1)?.with(&[2, 3]))
            }
            _ => Ok(self.g_inv_rec(u)?.with(&[2, 3])),
        }
    }

    fn g_inv_rec(&self, u: &Word) -> Result<Word> {
        let n = u.len();
        if n <= 2 {
            return self.g_rev.get(u).cloned().ok_or_else(|| not_in("p2g base table", u));
        }
        let l = u.letters();
        match (l[n - 3], l[n - 2], l[n - 1]) {
            (_, 3, 3) => Ok(self.g_inv_rec(&u.drop_suffix(1)?)?.with(&[1])),
            (3, 2, 3) => Ok(self.g_inv_rec(&u.drop_suffix(2)?)?.with(&[2, 1])),
            (2, 2, 3) => {
                let p = self.f_inv_rec(&u.drop_suffix(3)?)?;
                Ok(p.drop_suffix(1)?.with(&[2, 1]))
            }
            _ => Err(not_in("p2g inverse", u)),
        }
    }
}
