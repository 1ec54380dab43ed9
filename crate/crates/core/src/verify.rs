//! Exhaustive certification of the bijections and the counting identities.
//!
//! Every check produces a [`CheckResult`]; a failing check names the
//! lexicographically least witness it found. Nothing here aborts early.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::counting::{recurrence_violation, xyz_counts, xyz_family, RecurrenceKind, TransferAutomaton};
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::p1::{BaseTablesP1, P1Bijection};
use crate::p2::{BaseTablesP2, P2Bijection};
use crate::word::{w, Word};

pub const DEFAULT_MAX_N_P1: usize = 8;
pub const DEFAULT_MAX_N_P2: usize = 12;
/// Upper index for the x/y/z identity suite.
pub const XYZ_MAX_N: usize = 40;
/// Largest n for the automaton-only count comparisons.
pub const DEEP_COUNT_MAX_N: usize = 200;

/// One of the four recursive maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MapId {
    P1F,
    P1G,
    P2F,
    P2G,
}

impl MapId {
    pub const ALL: [MapId; 4] = [MapId::P1F, MapId::P1G, MapId::P2F, MapId::P2G];

    pub fn name(self) -> &'static str {
        match self {
            MapId::P1F => "p1f",
            MapId::P1G => "p1g",
            MapId::P2F => "p2f",
            MapId::P2G => "p2g",
        }
    }

    pub fn domain(self) -> FamilyId {
        match self {
            MapId::P1F => FamilyId::P1B,
            MapId::P1G => FamilyId::P1C,
            MapId::P2F => FamilyId::P2B,
            MapId::P2G => FamilyId::P2GDom,
        }
    }

    /// Family holding the image; `p2g` lands in its members ending 3.
    pub fn codomain(self) -> FamilyId {
        match self {
            MapId::P1F => FamilyId::P1A,
            MapId::P1G => FamilyId::P1D,
            MapId::P2F | MapId::P2G => FamilyId::P2A,
        }
    }

    pub fn min_n(self) -> usize {
        self.domain().spec().min_n
    }

    /// Codomain members at `n`.
    pub fn codomain_words(self, n: usize) -> Result<Vec<Word>> {
        let mut words = self.codomain().enumerate(n)?;
        if self == MapId::P2G {
            words.retain(|u| u.last() == Some(3));
        }
        Ok(words)
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapId::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// The system under test: both bijection pairs with their base tables.
#[derive(Clone, Debug, Default)]
pub struct Bijections {
    pub p1: P1Bijection,
    pub p2: P2Bijection,
}

impl Bijections {
    pub fn with_tables(p1: BaseTablesP1, p2: BaseTablesP2) -> Self {
        Bijections {
            p1: P1Bijection::with_tables(p1),
            p2: P2Bijection::with_tables(p2),
        }
    }

    pub fn apply(&self, map: MapId, n: usize, word: &Word) -> Result<Word> {
        match map {
            MapId::P1F => self.p1.f(n, word),
            MapId::P1G => self.p1.g(n, word),
            MapId::P2F => self.p2.f(n, word),
            MapId::P2G => self.p2.g(n, word),
        }
    }

    pub fn invert(&self, map: MapId, u: &Word) -> Result<Word> {
        match map {
            MapId::P1F => self.p1.f_inv(u),
            MapId::P1G => self.p1.g_inv(u),
            MapId::P2F => self.p2.f_inv(u),
            MapId::P2G => self.p2.g_inv(u),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub pass: bool,
    pub details: String,
    pub elapsed_ms: f64,
}

impl CheckResult {
    fn n(&self) -> Option<usize> {
        self.parameters.get("n").and_then(|s| s.parse().ok())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts by (name, n) and tallies.
    pub fn from_checks(mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| (&a.name, a.n()).cmp(&(&b.name, b.n())));
        let passed = results.iter().filter(|r| r.pass).count();
        let summary = Summary {
            total: results.len(),
            passed,
            failed: results.len() - passed,
        };
        VerificationReport { results, summary }
    }

    pub fn is_success(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    /// Fixed-width table, one line per check.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.results.iter().map(|r| r.name.len()).max().unwrap_or(4).max(5);
        out.push_str(&format!("{:<width$}  {:>4}  {:<4}  {:>9}  details\n", "check", "n", "ok", "ms"));
        for r in &self.results {
            let n = r.parameters.get("n").map(String::as_str).unwrap_or("-");
            let ok = if r.pass { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "{:<width$}  {:>4}  {:<4}  {:>9.3}  {}\n",
                r.name, n, ok, r.elapsed_ms, r.details
            ));
        }
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

/// Outcome of a check body: `Ok(details)` or `Err(details naming a witness)`.
type Outcome = std::result::Result<String, String>;

fn timed(name: &str, n: Option<usize>, body: impl FnOnce() -> Outcome) -> CheckResult {
    let start = Instant::now();
    let outcome = body();
    let elapsed_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    let mut parameters = BTreeMap::new();
    if let Some(n) = n {
        parameters.insert("n".to_string(), n.to_string());
    }
    let (pass, details) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        name: name.to_string(),
        parameters,
        pass,
        details,
        elapsed_ms,
    }
}

fn bijection_outcome(b: &Bijections, map: MapId, n: usize) -> Outcome {
    let domain = map.domain().enumerate(n).map_err(|e| e.to_string())?;
    let codomain = map.codomain_words(n).map_err(|e| e.to_string())?;
    let codomain_set: BTreeSet<&Word> = codomain.iter().collect();

    let mut images: BTreeMap<Word, Word> = BTreeMap::new();
    let mut forward = Vec::with_capacity(domain.len());
    for x in &domain {
        match b.apply(map, n, x) {
            Ok(u) => forward.push((x, u)),
            Err(e) => return Err(format!("not total: {x} ({e})")),
        }
    }
    for (x, u) in &forward {
        if !codomain_set.contains(u) {
            return Err(format!("image outside codomain: {x} -> {u}"));
        }
    }
    for (x, u) in &forward {
        if let Some(prev) = images.insert(u.clone(), (*x).clone()) {
            return Err(format!("not injective: {prev} and {x} -> {u}"));
        }
    }
    if let Some(missing) = codomain.iter().find(|u| !images.contains_key(*u)) {
        return Err(format!("not surjective: {missing} has no preimage"));
    }
    for (x, u) in &forward {
        match b.invert(map, u) {
            Ok(back) if back == **x => {}
            Ok(back) => return Err(format!("inverse mismatch: {x} -> {u} -> {back}")),
            Err(e) => return Err(format!("inverse failed: {x} -> {u} ({e})")),
        }
    }
    for u in &codomain {
        let round = b
            .invert(map, u)
            .and_then(|x| b.apply(map, n, &x).map(|v| (x, v)));
        match round {
            Ok((_, v)) if v == *u => {}
            Ok((x, v)) => return Err(format!("inverse mismatch: {u} -> {x} -> {v}")),
            Err(e) => return Err(format!("inverse failed: {u} ({e})")),
        }
    }
    Ok(format!("{} pairs", domain.len()))
}

/// Totality, codomain membership, injectivity, surjectivity and both round trips.
pub fn verify_bijection(b: &Bijections, map: MapId, n: usize) -> CheckResult {
    timed(&format!("bijection/{map}"), Some(n), || bijection_outcome(b, map, n))
}

/// Expected image class of `f` on a `P1B` word at n >= 3.
fn p1f_class(n: usize, x: &Word) -> (&'static [u8], bool) {
    // (required image suffix, whether the penultimate letter must be 3 or 4)
    if x.at(2 * n + 2) == Some(4) {
        if x.ends_with(&[4, 3, 4]) { (&[1], false) } else { (&[2], false) }
    } else if x.at(2 * n) == Some(4) {
        if x.ends_with(&[3, 2, 3, 4]) { (&[2, 3], false) } else { (&[1, 4], false) }
    } else if x.ends_with(&[1, 2, 3, 4]) || x.ends_with(&[5, 6, 5, 4]) {
        (&[3], true)
    } else {
        (&[4], true)
    }
}

fn p1g_class(n: usize, v: &Word) -> (&'static [u8], bool) {
    match (v.at(2 * n), v.suffix(2).ok().as_ref().map(Word::letters)) {
        (Some(4), Some([3, 2])) => (&[2, 3], false),
        (Some(4), _) => (&[1, 4], false),
        (_, Some([1, 2] | [5, 6])) => (&[3], true),
        _ => (&[4], true),
    }
}

fn in_class(u: &Word, (tail, pen34): (&[u8], bool)) -> bool {
    u.ends_with(tail) && (!pen34 || u.len() >= 2 && matches!(u.letters()[u.len() - 2], 3 | 4))
}

fn class_outcome(
    b: &Bijections,
    map: MapId,
    n: usize,
    class: impl Fn(&Word) -> (&'static [u8], bool),
) -> Outcome {
    let domain = map.domain().enumerate(n).map_err(|e| e.to_string())?;
    for x in &domain {
        let u = b.apply(map, n, x).map_err(|e| format!("{x}: {e}"))?;
        let want = class(x);
        if !in_class(&u, want) {
            let tail = Word::from_letters(want.0.to_vec()).unwrap_or_default();
            return Err(format!("{x} -> {u}, expected suffix {tail}"));
        }
    }
    Ok(format!("{} words", domain.len()))
}

fn p2f_class(x: &Word) -> (&'static [u8], bool) {
    if x.ends_with(&[3, 3]) {
        (&[1], false)
    } else if x.ends_with(&[1, 2, 3]) {
        (&[3], false)
    } else {
        (&[2], false)
    }
}

fn p2g_class(x: &Word) -> (&'static [u8], bool) {
    if x.ends_with(&[1, 1]) {
        (&[3, 3], false)
    } else if x.ends_with(&[1, 2, 1]) {
        (&[3, 2, 3], false)
    } else {
        (&[2, 2, 3], false)
    }
}

/// Words ending 123 map exactly onto the A-words ending 3, and there are c_n of them.
fn p2_c_class_outcome(b: &Bijections, n: usize) -> Outcome {
    let domain = FamilyId::P2B.enumerate(n).map_err(|e| e.to_string())?;
    let mut img = BTreeSet::new();
    for x in domain.iter().filter(|x| x.ends_with(&[1, 2, 3])) {
        img.insert(b.p2.f(n, x).map_err(|e| format!("{x}: {e}"))?);
    }
    let want: BTreeSet<Word> = MapId::P2G.codomain_words(n).map_err(|e| e.to_string())?.into_iter().collect();
    if let Some(u) = img.symmetric_difference(&want).next() {
        return Err(format!("image of the 123 class differs at {u}"));
    }
    let c = xyz_counts(n).c;
    if BigUint::from(want.len()) != c {
        return Err(format!("{} words ending 3, c_n = {c}", want.len()));
    }
    Ok(format!("{} words, c_n = {c}", want.len()))
}

fn p1_golden() -> BaseTablesP1 {
    let pairs = |xs: &[(&str, &str)]| xs.iter().map(|&(a, b)| (w(a), w(b))).collect();
    BaseTablesP1 {
        f: pairs(&[
            ("121234", "1"),
            ("123454", "2"),
            ("123234", "3"),
            ("123434", "4"),
            ("12123434", "11"),
            ("12323434", "21"),
            ("12343434", "31"),
            ("12345434", "41"),
            ("12123454", "12"),
            ("12323454", "22"),
            ("12343454", "32"),
            ("12345454", "42"),
            ("12121234", "14"),
            ("12123234", "23"),
            ("12321234", "33"),
            ("12323234", "34"),
            ("12343234", "43"),
            ("12345654", "44"),
        ]),
        g: pairs(&[
            ("1212", "3"),
            ("1232", "4"),
            ("121212", "23"),
            ("121232", "33"),
            ("123212", "43"),
            ("123232", "14"),
            ("123456", "34"),
            ("123432", "44"),
        ]),
    }
}

fn p2_golden() -> BaseTablesP2 {
    let pairs = |xs: &[(&str, &str)]| xs.iter().map(|&(a, b)| (w(a), w(b))).collect();
    BaseTablesP2 {
        f: pairs(&[("123", ""), ("1123", "1"), ("1223", "2"), ("1233", "3")]),
        g: pairs(&[("11", "3"), ("111", "33"), ("121", "23")]),
    }
}

fn golden_outcome(got: &BTreeMap<Word, Word>, want: &BTreeMap<Word, Word>) -> Outcome {
    let keys: BTreeSet<&Word> = got.keys().chain(want.keys()).collect();
    for k in keys {
        match (got.get(k), want.get(k)) {
            (Some(a), Some(b)) if a == b => {}
            (a, b) => {
                let show = |x: Option<&Word>| x.map_or("missing".to_string(), Word::to_string);
                return Err(format!("{k}: table has {}, expected {}", show(a), show(b)));
            }
        }
    }
    Ok(format!("{} entries", want.len()))
}

/// Counts of a family at each `n` by enumeration.
fn enum_counts(id: FamilyId, max_n: usize) -> Vec<(usize, usize)> {
    let min = id.spec().min_n;
    (min..=max_n).map(|n| (n, id.spec().enumerate(n).len())).collect()
}

fn count_oracle_outcome(id: FamilyId, n: usize) -> Outcome {
    let by_enum = id.family_size(n).map_err(|e| e.to_string())?;
    let by_automaton = crate::counting::count_family(id, n).map_err(|e| e.to_string())?;
    if BigUint::from(by_enum) != by_automaton {
        return Err(format!("enumeration {by_enum}, automaton {by_automaton}"));
    }
    Ok(by_enum.to_string())
}

fn equal_counts(
    left: FamilyId,
    right: FamilyId,
    min_n: usize,
    max_n: usize,
    right_filter: Option<u8>,
) -> Outcome {
    let la = TransferAutomaton::for_family(left);
    let ra = TransferAutomaton::new(crate::family::FamilySpec {
        last_letters: right_filter.map(|l| vec![l]).or(right.spec().last_letters),
        ..right.spec()
    });
    let lc = la.counts_up_to(max_n);
    let rc = ra.counts_up_to(max_n);
    let get = |v: &[(usize, BigUint)], n: usize| v.iter().find(|e| e.0 == n).map(|e| e.1.clone());
    for n in min_n..=max_n {
        let (a, b) = (get(&lc, n), get(&rc, n));
        if a != b {
            return Err(format!("n={n}: {left} has {a:?}, {right} has {b:?}"));
        }
    }
    Ok(format!("{min_n}..={max_n}"))
}

fn recurrence_outcome(id: FamilyId, kind: RecurrenceKind, max_enum: usize) -> Outcome {
    let counts: Vec<BigUint> = TransferAutomaton::for_family(id)
        .counts_up_to(DEEP_COUNT_MAX_N)
        .into_iter()
        .map(|e| e.1)
        .collect();
    let min = id.spec().min_n;
    if let Some(i) = recurrence_violation(&counts, kind) {
        return Err(format!("automaton count at n={} breaks the recurrence", i + min));
    }
    let enumerated: Vec<BigUint> = enum_counts(id, max_enum).into_iter().map(|e| BigUint::from(e.1)).collect();
    if let Some(i) = recurrence_violation(&enumerated, kind) {
        return Err(format!("enumerated count at n={} breaks the recurrence", i + min));
    }
    Ok(format!("n={min}..={DEEP_COUNT_MAX_N} by automaton, n<={max_enum} by enumeration"))
}

/// `(x, y, z)` at index `k >= -1` and `(a, b, c)` at `k >= 0`, by one route.
struct CountTables {
    xyz: Vec<[BigUint; 3]>,
    abc: Vec<[BigUint; 3]>,
}

impl CountTables {
    fn xyz(&self, k: isize) -> &[BigUint; 3] {
        &self.xyz[(k + 1) as usize]
    }

    fn by_automaton(max_n: usize) -> Self {
        let t = TransferAutomaton::new(xyz_family()).by_last_letter_up_to(max_n + 3);
        let a = TransferAutomaton::for_family(FamilyId::P2A).by_last_letter_up_to(max_n);
        let three = |v: &[BigUint]| [v[1].clone(), v[2].clone(), v[3].clone()];
        CountTables {
            xyz: t[2..].iter().map(|v| three(v)).collect(),
            abc: a.iter().map(|v| three(v)).collect(),
        }
    }

    fn by_recurrence(max_n: usize) -> Self {
        let mut xyz = vec![[1u32.into(), 1u32.into(), 0u32.into()]];
        let mut abc = Vec::new();
        for n in 0..=max_n {
            let v = xyz_counts(n);
            xyz.push([v.x, v.y, v.z]);
            abc.push([v.a, v.b, v.c]);
        }
        CountTables { xyz, abc }
    }

    fn by_enumeration(max_n: usize) -> Self {
        let spec = xyz_family();
        let group = |words: Vec<Word>| {
            let mut v = [BigUint::default(), BigUint::default(), BigUint::default()];
            for x in words {
                if let Some(l) = x.last() {
                    v[l as usize - 1] += 1u32;
                }
            }
            v
        };
        // length k + 3 for k >= -1
        let xyz = (2..=max_n + 3)
            .map(|len| group(crate::family::FamilySpec { length_offset: len, length_scale: 0, ..spec.clone() }.enumerate(0)))
            .collect();
        let abc = (0..=max_n).map(|n| group(FamilyId::P2A.spec().enumerate(n))).collect();
        CountTables { xyz, abc }
    }
}

fn xyz_identities(t: &CountTables, n: usize) -> Outcome {
    let k = n as isize;
    let [_, y1, z1] = t.xyz(k - 1);
    let [_, _, z] = t.xyz(k);
    let [a, b, c] = &t.abc[n];
    let x2 = &t.xyz(k - 2)[0];
    let [x3, y3, _] = t.xyz(k - 3);
    let checks = [
        ("z_n = z_{n-1} + y_{n-1}", *z == z1 + y1),
        ("a_n = z_{n-1}", a == z1),
        ("b_n = z_{n-1}", b == z1),
        ("c_n = z_n - a_n - b_n", c + a + b == *z),
        ("c_n = y_{n-1} - z_{n-1}", c + z1 == *y1),
        ("c_n = x_{n-2}", c == x2),
        ("x_{n-2} = x_{n-3} + y_{n-3}", *x2 == x3 + y3),
    ];
    match checks.iter().find(|c| !c.1) {
        Some((name, _)) => Err(format!("{name} fails")),
        None => Ok(format!("x,y,z = {},{},{}; a,b,c = {a},{b},{c}", t.xyz(k)[0], t.xyz(k)[1], z)),
    }
}

fn xyz_outcome(rec: &CountTables, auto: &CountTables, en: Option<&CountTables>, n: usize) -> Outcome {
    let k = n as isize;
    for j in [k - 3, k - 2, k - 1, k] {
        if rec.xyz(j) != auto.xyz(j) {
            return Err(format!("recurrence and automaton disagree on (x,y,z) at {j}"));
        }
        if en.is_some_and(|e| e.xyz(j) != rec.xyz(j)) {
            return Err(format!("recurrence and enumeration disagree on (x,y,z) at {j}"));
        }
    }
    if rec.abc[n] != auto.abc[n] {
        return Err(format!("recurrence and automaton disagree on (a,b,c) at {n}"));
    }
    if en.is_some_and(|e| e.abc[n] != rec.abc[n]) {
        return Err(format!("recurrence and enumeration disagree on (a,b,c) at {n}"));
    }
    xyz_identities(auto, n)
}

/// The full suite with the shipped base tables.
pub fn run_all(max_n_p1: usize, max_n_p2: usize) -> VerificationReport {
    run_all_with(&Bijections::default(), max_n_p1, max_n_p2)
}

/// The full suite against an arbitrary system under test.
pub fn run_all_with(b: &Bijections, max_n_p1: usize, max_n_p2: usize) -> VerificationReport {
    let mut results = Vec::new();

    for map in MapId::ALL {
        let max = if matches!(map, MapId::P1F | MapId::P1G) { max_n_p1 } else { max_n_p2 };
        for n in map.min_n()..=max {
            results.push(verify_bijection(b, map, n));
        }
    }

    let (g1, g2) = (p1_golden(), p2_golden());
    let t1 = b.p1.tables();
    let t2 = b.p2.tables();
    results.push(timed("golden_base/p1f", None, || golden_outcome(&t1.f, &g1.f)));
    results.push(timed("golden_base/p1g", None, || golden_outcome(&t1.g, &g1.g)));
    results.push(timed("golden_base/p2f", None, || golden_outcome(&t2.f, &g2.f)));
    results.push(timed("golden_base/p2g", None, || golden_outcome(&t2.g, &g2.g)));

    for n in 3..=max_n_p1 {
        results.push(timed("ending_class/p1f", Some(n), || {
            class_outcome(b, MapId::P1F, n, |x| p1f_class(n, x))
        }));
        results.push(timed("ending_class/p1g", Some(n), || {
            class_outcome(b, MapId::P1G, n, |x| p1g_class(n, x))
        }));
    }
    for n in 2..=max_n_p2 {
        results.push(timed("ending_class/p2f", Some(n), || class_outcome(b, MapId::P2F, n, p2f_class)));
        results.push(timed("ending_class/p2f_123", Some(n), || p2_c_class_outcome(b, n)));
    }
    for n in 3..=max_n_p2 {
        results.push(timed("ending_class/p2g", Some(n), || class_outcome(b, MapId::P2G, n, p2g_class)));
    }

    let xyz_max = XYZ_MAX_N.max(max_n_p2);
    let rec = CountTables::by_recurrence(xyz_max);
    let auto = CountTables::by_automaton(xyz_max);
    let en = CountTables::by_enumeration(max_n_p2);
    for n in 2..=xyz_max {
        let en = (n <= max_n_p2).then_some(&en);
        results.push(timed("xyz_identities", Some(n), || xyz_outcome(&rec, &auto, en, n)));
    }

    for id in FamilyId::ALL {
        let max = if id.name().starts_with("p1") { max_n_p1 } else { max_n_p2 };
        for n in id.spec().min_n..=max {
            results.push(timed(&format!("count_oracle/{id}"), Some(n), || count_oracle_outcome(id, n)));
        }
    }

    results.push(timed("cross_count/p1a_p1b", None, || {
        equal_counts(FamilyId::P1A, FamilyId::P1B, 1, DEEP_COUNT_MAX_N, None)
    }));
    results.push(timed("cross_count/p1d_p1c", None, || {
        equal_counts(FamilyId::P1D, FamilyId::P1C, 1, DEEP_COUNT_MAX_N, None)
    }));
    results.push(timed("cross_count/p2a_p2b", None, || {
        equal_counts(FamilyId::P2A, FamilyId::P2B, 0, DEEP_COUNT_MAX_N, None)
    }));
    results.push(timed("cross_count/p2gdom_p2a3", None, || {
        equal_counts(FamilyId::P2GDom, FamilyId::P2A, 1, DEEP_COUNT_MAX_N, Some(3))
    }));

    results.push(timed("recurrence/p1", None, || {
        recurrence_outcome(FamilyId::P1A, RecurrenceKind::P1, max_n_p1)
    }));
    results.push(timed("recurrence/p2", None, || {
        recurrence_outcome(FamilyId::P2A, RecurrenceKind::P2, max_n_p2)
    }));

    VerificationReport::from_checks(results)
}
