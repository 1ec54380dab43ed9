//! Argument handling and output formatting for the `walkavoid` binary.
//!
//! Exit codes: 0 on success, 1 when a verification or table flag fails,
//! 2 on usage or domain errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};
use walkavoid::counting::{
    compare_bfile, count_family, discover_offset, parse_bfile, recurrence_violation, RecurrenceKind,
    TransferAutomaton,
};
use walkavoid::verify::{run_all, verify_bijection, DEFAULT_MAX_N_P1, DEFAULT_MAX_N_P2};
use walkavoid::{Bijections, FamilyId, MapId, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "walkavoid", version, about = "Bijections between unit-step walks and factor-avoiding words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact size of a family at n
    Count {
        #[arg(long, value_parser = parse_id::<FamilyId>)]
        family: FamilyId,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// List a family at n in lexicographic order
    Enumerate {
        #[arg(long, value_parser = parse_id::<FamilyId>)]
        family: FamilyId,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Apply a bijection to a word (n is inferred from its length)
    Map {
        #[arg(long, value_parser = parse_id::<MapId>)]
        bijection: MapId,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Apply the inverse of a bijection to a word
    Invert {
        #[arg(long, value_parser = parse_id::<MapId>)]
        bijection: MapId,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Check bijectivity exhaustively; without --bijection runs the whole suite
    Verify {
        #[arg(long, value_parser = parse_id::<MapId>)]
        bijection: Option<MapId>,
        /// A single n (requires --bijection)
        #[arg(long, requires = "bijection", conflicts_with = "max_n")]
        n: Option<usize>,
        /// Upper bound on n
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Per-n counts of both sides of a correspondence
    Table {
        #[arg(long, value_parser = ["p1", "p2"])]
        problem: String,
        #[arg(long)]
        max_n: usize,
        /// OEIS b-file to compare against
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// b-file index of n = 0; discovered from the first terms when omitted
        #[arg(long, requires = "bfile", allow_hyphen_values = true)]
        offset: Option<i64>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// The full verification suite with default bounds
    Selftest {
        #[command(flatten)]
        fmt: FormatArg,
    },
}

fn parse_id<T: FromStr<Err = walkavoid::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: walkavoid::Error| e.to_string())
}

/// A failure that ends the command with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

fn json_big(n: &BigUint) -> Value {
    // arbitrary_precision keeps every digit
    Value::Number(n.to_string().parse().expect("decimal digits"))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, err: &mut dyn Write) -> Result<Output, UsageError> {
    match cmd {
        Command::Count { family, n, fmt } => {
            let c = count_family(family, n)?;
            Ok(Output::ok(match fmt.format {
                Format::Text => format!("{c}\n"),
                Format::Csv => format!("family,n,count\n{family},{n},{c}\n"),
                Format::Json => pretty(&json!({"family": family.name(), "n": n, "count": json_big(&c)})),
            }))
        }
        Command::Enumerate { family, n, fmt } => {
            let words = family.enumerate(n)?;
            Ok(Output::ok(match fmt.format {
                Format::Text => words.iter().map(|w| format!("{w}\n")).collect(),
                Format::Csv => {
                    std::iter::once("word\n".to_string()).chain(words.iter().map(|w| format!("{}\n", w.to_digits()))).collect()
                }
                Format::Json => pretty(&Value::from(words.iter().map(Word::to_digits).collect::<Vec<_>>())),
            }))
        }
        Command::Map { bijection, word, n, fmt } => {
            let input: Word = word.parse()?;
            let inferred = bijection.domain().n_for_length(input.len()).ok_or_else(|| {
                UsageError(format!("word {input} has no valid length for the domain of {bijection}"))
            })?;
            check_n(n, inferred)?;
            let output = Bijections::default().apply(bijection, inferred, &input)?;
            Ok(Output::ok(render_pair(bijection, inferred, &input, &output, fmt.format)))
        }
        Command::Invert { bijection, word, n, fmt } => {
            let input: Word = word.parse()?;
            check_n(n, input.len())?;
            if input.len() < bijection.min_n() {
                return Err(UsageError(format!("word {input} is too short for {bijection}")));
            }
            let output = Bijections::default().invert(bijection, &input)?;
            Ok(Output::ok(render_pair(bijection, input.len(), &input, &output, fmt.format)))
        }
        Command::Verify { bijection, n, max_n, fmt } => match bijection {
            Some(map) => {
                let range = match (n, max_n) {
                    (Some(n), _) => n..=n,
                    (None, Some(m)) => map.min_n()..=m,
                    (None, None) => {
                        let m = if matches!(map, MapId::P1F | MapId::P1G) { DEFAULT_MAX_N_P1 } else { DEFAULT_MAX_N_P2 };
                        map.min_n()..=m
                    }
                };
                if *range.start() < map.min_n() {
                    return Err(UsageError(format!("n must be at least {} for {map}", map.min_n())));
                }
                let b = Bijections::default();
                let results: Vec<_> = range.map(|n| verify_bijection(&b, map, n)).collect();
                let report = walkavoid::verify::VerificationReport::from_checks(results);
                Ok(render_report(&report, fmt.format))
            }
            None => {
                let (m1, m2) = match max_n {
                    Some(m) if m < 2 => return Err(UsageError("--max-n must be at least 2".into())),
                    Some(m) => (m, m),
                    None => (DEFAULT_MAX_N_P1, DEFAULT_MAX_N_P2),
                };
                Ok(render_report(&run_all(m1, m2), fmt.format))
            }
        },
        Command::Table { problem, max_n, bfile, offset, fmt } => table(&problem, max_n, bfile, offset, fmt.format, err),
        Command::Selftest { fmt } => Ok(render_report(&run_all(DEFAULT_MAX_N_P1, DEFAULT_MAX_N_P2), fmt.format)),
    }
}

fn check_n(given: Option<usize>, inferred: usize) -> Result<(), UsageError> {
    match given {
        Some(n) if n != inferred => Err(UsageError(format!("--n {n} disagrees with the word length (n = {inferred})"))),
        _ => Ok(()),
    }
}

fn render_pair(map: MapId, n: usize, input: &Word, output: &Word, format: Format) -> String {
    match format {
        Format::Text => format!("{output}\n"),
        Format::Csv => format!("bijection,n,input,output\n{map},{n},{},{}\n", input.to_digits(), output.to_digits()),
        Format::Json => pretty(&json!({
            "bijection": map.name(),
            "n": n,
            "input": input.to_digits(),
            "output": output.to_digits(),
        })),
    }
}

fn render_report(report: &walkavoid::verify::VerificationReport, format: Format) -> Output {
    let text = match format {
        Format::Text => report.to_table(),
        Format::Json => pretty(&serde_json::to_value(report).expect("serializable")),
        Format::Csv => {
            let mut s = String::from("name,n,pass,details,elapsed_ms\n");
            for r in &report.results {
                let n = r.parameters.get("n").cloned().unwrap_or_default();
                let details = r.details.replace('"', "\"\"");
                s.push_str(&format!("{},{n},{},\"{details}\",{}\n", r.name, r.pass, r.elapsed_ms));
            }
            s
        }
    };
    Output {
        text,
        code: if report.is_success() { EXIT_OK } else { EXIT_FAILED },
    }
}

struct Row {
    n: usize,
    a: BigUint,
    b: BigUint,
    recurrence: Option<bool>,
    bfile: Option<bool>,
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "ok",
        Some(false) => "FAIL",
        None => "-",
    }
}

fn table(
    problem: &str,
    max_n: usize,
    bfile: Option<PathBuf>,
    offset: Option<i64>,
    format: Format,
    err: &mut dyn Write,
) -> Result<Output, UsageError> {
    if max_n < 1 {
        return Err(UsageError("--max-n must be at least 1".into()));
    }
    let (a_id, b_id, kind) = match problem {
        "p1" => (FamilyId::P1A, FamilyId::P1B, RecurrenceKind::P1),
        _ => (FamilyId::P2A, FamilyId::P2B, RecurrenceKind::P2),
    };
    let a_counts = TransferAutomaton::for_family(a_id).counts_up_to(max_n);
    let b_counts = TransferAutomaton::for_family(b_id).counts_up_to(max_n);
    let min = a_id.spec().min_n;

    let bfile_rows = match &bfile {
        None => None,
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            let seq = parse_bfile(&text)?;
            let off = match offset {
                Some(o) => o,
                None => {
                    let o = discover_offset(&seq, a_id)
                        .ok_or_else(|| UsageError(format!("could not align {} with {a_id}", path.display())))?;
                    let _ = writeln!(err, "note: b-file offset {o} (index of n = 0), discovered from the first terms");
                    o
                }
            };
            Some((off, compare_bfile(&seq, a_id, off, max_n)))
        }
    };

    let series: Vec<BigUint> = a_counts.iter().map(|e| e.1.clone()).collect();
    let rows: Vec<Row> = a_counts
        .iter()
        .zip(&b_counts)
        .filter(|(a, _)| a.0 >= 1)
        .map(|((n, a), (_, b))| {
            let i = n - min;
            let recurrence = (i >= 2).then(|| recurrence_violation(&series[i - 2..=i], kind).is_none());
            let bfile = bfile_rows.as_ref().and_then(|(_, m)| m.iter().find(|r| r.n == *n).map(|r| r.pass));
            Row { n: *n, a: a.clone(), b: b.clone(), recurrence, bfile }
        })
        .collect();

    let failed = rows.iter().any(|r| r.a != r.b || r.recurrence == Some(false) || r.bfile == Some(false));
    let with_bfile = bfile_rows.is_some();
    let text = match format {
        Format::Text => {
            let wa = rows.iter().map(|r| r.a.to_string().len()).max().unwrap_or(1).max(a_id.name().len());
            let wb = rows.iter().map(|r| r.b.to_string().len()).max().unwrap_or(1).max(b_id.name().len());
            let mut s = format!("{:>4}  {:>wa$}  {:>wb$}  equal  recurrence", "n", a_id.name(), b_id.name());
            if with_bfile {
                s.push_str("  bfile");
            }
            s.push('\n');
            for r in &rows {
                s.push_str(&format!(
                    "{:>4}  {:>wa$}  {:>wb$}  {:<5}  {:<10}",
                    r.n,
                    r.a,
                    r.b,
                    flag(Some(r.a == r.b)),
                    flag(r.recurrence)
                ));
                if with_bfile {
                    s.push_str(&format!("  {}", flag(r.bfile)));
                }
                s = s.trim_end().to_string();
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = format!("n,{},{},equal,recurrence", a_id.name(), b_id.name());
            if with_bfile {
                s.push_str(",bfile");
            }
            s.push('\n');
            for r in &rows {
                s.push_str(&format!("{},{},{},{},{}", r.n, r.a, r.b, r.a == r.b, opt(r.recurrence)));
                if with_bfile {
                    s.push_str(&format!(",{}", opt(r.bfile)));
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut m = serde_json::Map::new();
                    m.insert("n".into(), r.n.into());
                    m.insert(a_id.name().into(), json_big(&r.a));
                    m.insert(b_id.name().into(), json_big(&r.b));
                    m.insert("equal".into(), (r.a == r.b).into());
                    m.insert("recurrence".into(), json!(r.recurrence));
                    m.insert("bfile".into(), json!(r.bfile));
                    Value::Object(m)
                })
                .collect();
            pretty(&json!({
                "problem": problem,
                "bfile_offset": bfile_rows.as_ref().map(|(o, _)| *o),
                "rows": rows,
            }))
        }
    };
    Ok(Output {
        text,
        code: if failed { EXIT_FAILED } else { EXIT_OK },
    })
}

fn opt(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}
