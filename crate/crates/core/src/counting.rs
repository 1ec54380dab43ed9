//! Exact counting without enumeration.
//!
//! A [`TransferAutomaton`] tracks the last few letters of a word, enough to
//! detect every forbidden factor and walk step, and counts accepted words of
//! each length by iterating a vector of big integers over its states.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::{FamilyId, FamilySpec};
use crate::word::Pattern;

/// Deterministic automaton over suffix states for one [`FamilySpec`].
///
/// State 0 is the empty word. Words that break a constraint fall into an
/// implicit dead state and are dropped from the count vector.
#[derive(Clone, Debug)]
pub struct TransferAutomaton {
    spec: FamilySpec,
    /// Suffix kept in each state.
    states: Vec<Vec<u8>>,
    /// `delta[s][c - 1]`: next state, `None` for the dead state.
    delta: Vec<Vec<Option<usize>>>,
}

impl TransferAutomaton {
    pub fn new(spec: FamilySpec) -> Self {
        let memory = spec
            .forbidden
            .iter()
            .map(Pattern::len)
            .max()
            .unwrap_or(1)
            .max(2)
            - 1;
        let mut states: Vec<Vec<u8>> = vec![Vec::new()];
        let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(Vec::new(), 0)]);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let cur = states[i].clone();
            let row = (1..=spec.alphabet)
                .map(|c| {
                    if !spec.step_allowed(&cur, c) {
                        return None;
                    }
                    let mut next = cur.clone();
                    next.push(c);
                    if next.len() > memory {
                        next.drain(..next.len() - memory);
                    }
                    // The first letter is only constrained out of the empty state,
                    // so non-empty states never need to remember it.
                    let id = *index.entry(next.clone()).or_insert_with(|| {
                        states.push(next);
                        states.len() - 1
                    });
                    Some(id)
                })
                .collect();
            delta.push(row);
            i += 1;
        }
        TransferAutomaton { spec, states, delta }
    }

    pub fn for_family(id: FamilyId) -> Self {
        Self::new(id.spec())
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    fn step(&self, v: &[BigUint]) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); self.states.len()];
        for (s, count) in v.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for t in self.delta[s].iter().flatten() {
                out[*t] += count;
            }
        }
        out
    }

    /// Counts of valid words of length `len` grouped by last letter
    /// (index 0 holds the empty word, used only at length 0).
    ///
    /// The accepting last-letter set of the spec is ignored here.
    pub fn counts_by_last_letter(&self, len: usize) -> Vec<BigUint> {
        self.by_last_letter_up_to(len).pop().expect("non-empty")
    }

    /// [`Self::counts_by_last_letter`] for every length `0..=max_len`.
    pub fn by_last_letter_up_to(&self, max_len: usize) -> Vec<Vec<BigUint>> {
        let mut v = vec![BigUint::zero(); self.states.len()];
        v[0] = BigUint::one();
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            if len > 0 {
                v = self.step(&v);
            }
            let mut by_letter = vec![BigUint::zero(); self.spec.alphabet as usize + 1];
            for (s, c) in v.iter().enumerate() {
                by_letter[self.states[s].last().map_or(0, |&l| l as usize)] += c;
            }
            out.push(by_letter);
        }
        out
    }

    fn accepted(&self, by_letter: &[BigUint]) -> BigUint {
        match &self.spec.last_letters {
            None => by_letter.iter().sum(),
            Some(ls) => ls.iter().map(|&l| &by_letter[l as usize]).sum(),
        }
    }

    /// Number of family members of length exactly `len`.
    pub fn count_length(&self, len: usize) -> BigUint {
        self.accepted(&self.counts_by_last_letter(len))
    }

    /// Family counts for every parameter `n` with `min_n <= n <= max_n`.
    pub fn counts_up_to(&self, max_n: usize) -> Vec<(usize, BigUint)> {
        let spec = &self.spec;
        if max_n < spec.min_n {
            return Vec::new();
        }
        let table = self.by_last_letter_up_to(spec.length(max_n));
        (spec.min_n..=max_n)
            .map(|n| (n, self.accepted(&table[spec.length(n)])))
            .collect()
    }
}

/// Exact family size computed by the transfer automaton.
pub fn count_family(id: FamilyId, n: usize) -> Result<BigUint> {
    id.check_n(n)?;
    let spec = id.spec();
    let len = spec.length(n);
    Ok(TransferAutomaton::new(spec).count_length(len))
}

/// Words over {1,2,3} starting with 1 and avoiding 13 and 31, any last letter.
pub fn xyz_family() -> FamilySpec {
    FamilySpec {
        last_letters: None,
        ..FamilyId::P2B.spec()
    }
}

/// Counts by last letter of the length-(n+3) words of [`xyz_family`] (x, y, z)
/// and of the length-n words of `P2A` (a, b, c).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountVector {
    pub x: BigUint,
    pub y: BigUint,
    pub z: BigUint,
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
}

/// Computes the counts from the linear recurrences alone.
///
/// `x` gains from words ending 1 or 2, `y` from everything, `z` from 2 or 3,
/// starting at (2, 2, 1) for n = 0. Then `a = b = z(n-1)` and `c = x(n-2)`;
/// the term `x(-1) = 1` counts the single word `11`.
pub fn xyz_counts(n: usize) -> CountVector {
    // xs[k] holds (x, y, z) at index k - 1.
    let mut xs: Vec<[BigUint; 3]> = vec![[1u32.into(), 1u32.into(), 0u32.into()]];
    let mut cur = [BigUint::from(2u32), BigUint::from(2u32), BigUint::one()];
    xs.push(cur.clone());
    for _ in 0..n {
        let [x, y, z] = &cur;
        cur = [x + y, x + y + z, y + z];
        xs.push(cur.clone());
    }
    let at = |k: isize| &xs[(k + 1) as usize];
    let n = n as isize;
    let (a, c) = match n {
        0 => (BigUint::zero(), BigUint::zero()),
        _ => (at(n - 1)[2].clone(), at(n - 2)[0].clone()),
    };
    let [x, y, z] = at(n).clone();
    CountVector { x, y, z, b: a.clone(), a, c }
}

/// Which linear recurrence [`recurrence_check`] tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceKind {
    /// s(n) = 4 s(n-1) - 2 s(n-2)
    P1,
    /// s(n) = 2 s(n-1) + s(n-2) + 1
    P2,
}

impl FromStr for RecurrenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p1" => Ok(RecurrenceKind::P1),
            "p2" => Ok(RecurrenceKind::P2),
            _ => Err(Error::UnknownId(s.to_string())),
        }
    }
}

/// Index of the first term breaking the recurrence, if any.
pub fn recurrence_violation<T: Into<BigInt> + Clone>(seq: &[T], kind: RecurrenceKind) -> Option<usize> {
    let s: Vec<BigInt> = seq.iter().cloned().map(Into::into).collect();
    (2..s.len()).find(|&i| {
        let want = match kind {
            RecurrenceKind::P1 => 4 * &s[i - 1] - 2 * &s[i - 2],
            RecurrenceKind::P2 => 2 * &s[i - 1] + &s[i - 2] + 1,
        };
        s[i] != want
    })
}

/// True iff every term from the third on satisfies the recurrence.
/// Sequences shorter than three terms verify nothing and return false.
pub fn recurrence_check<T: Into<BigInt> + Clone>(seq: &[T], kind: RecurrenceKind) -> bool {
    seq.len() >= 3 && recurrence_violation(seq, kind).is_none()
}

/// A sequence read from an OEIS b-file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BFileSequence {
    pub entries: Vec<(i64, BigInt)>,
}

impl BFileSequence {
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }
}

/// Parses `index value` lines; `#` comments and blank lines are skipped.
pub fn parse_bfile(text: &str) -> Result<BFileSequence> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::BFileParse { line: line_no, message };
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(format!("expected \"index value\", got {line:?}")));
        };
        let idx: i64 = idx.parse().map_err(|_| err(format!("bad index {idx:?}")))?;
        let val: BigInt = val.parse().map_err(|_| err(format!("bad value {val:?}")))?;
        if entries.last().is_some_and(|&(prev, _)| prev >= idx) {
            return Err(err(format!("index {idx} is not increasing")));
        }
        entries.push((idx, val));
    }
    Ok(BFileSequence { entries })
}

/// One aligned comparison between a b-file term and a computed count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileMatch {
    pub index: i64,
    pub n: usize,
    pub expected: BigInt,
    pub computed: BigUint,
    pub pass: bool,
}

/// Compares `count_family(id, n)` with the b-file term at index `n + offset`
/// for every `n` in range with `n <= max_n`.
pub fn compare_bfile(seq: &BFileSequence, id: FamilyId, offset: i64, max_n: usize) -> Vec<BFileMatch> {
    let counts = TransferAutomaton::for_family(id).counts_up_to(max_n);
    counts
        .into_iter()
        .filter_map(|(n, computed)| {
            let index = n as i64 + offset;
            seq.get(index).map(|expected| BFileMatch {
                index,
                n,
                pass: BigInt::from(computed.clone()) == *expected,
                expected: expected.clone(),
                computed,
            })
        })
        .collect()
}

/// Smallest offset (within the b-file's index range) at which the first two
/// computed counts of the family appear at consecutive indices.
pub fn discover_offset(seq: &BFileSequence, id: FamilyId) -> Option<i64> {
    let min_n = id.spec().min_n;
    let counts = TransferAutomaton::for_family(id).counts_up_to(min_n + 1);
    let (c0, c1) = (BigInt::from(counts[0].1.clone()), BigInt::from(counts[1].1.clone()));
    seq.entries.iter().find_map(|(idx, v)| {
        let offset = idx - min_n as i64;
        (*v == c0 && seq.get(idx + 1) == Some(&c1)).then_some(offset)
    })
}
