//! `svt`: counts, series dumps, expectations and the verification harness
//! from the command line.
//!
//! Exit codes: 0 success, 1 contract violation, 2 verification disagreement,
//! 3 I/O failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use svtab::formulas::{self, ratio_string};
use svtab::genfun::{Builder, Point};
use svtab::motzkin::count_paths;
use svtab::polyseries::dump_rational;
use svtab::verify::{self, feasible_weights, Grid};

const DEFAULT_MAX_ORDER: usize = 24;

#[derive(Parser)]
#[command(name = "svt", version, about = "Two-rowed set-valued tableaux: counts, series and cross-checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form count: refined with --c/--d/--e, row-refined with --m, cumulative otherwise.
    Count(CountArgs),
    /// Expected length of the second row over straight shapes, as p/q.
    Expected {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Dump the coefficients of a generating function.
    Series(SeriesArgs),
    /// Run the cross-verification harness.
    Verify {
        /// Bound on n for every layer; the default grid is used when absent.
        #[arg(long)]
        max_n: Option<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Evaluate the grid on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Export a sequence of closed-form values as CSV.
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Straight,
    Skew,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(clap::Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    f: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    e: Option<usize>,
    /// Number of entries in the first row (straight family only).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Also count by brute force over admissible paths.
    #[arg(long)]
    oracle: bool,
}

#[derive(clap::Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    f: Option<usize>,
    #[arg(long)]
    order: usize,
    /// Cap on --order; defaults to $SVT_MAX_ORDER, then 24.
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    x: Option<BigRational>,
    #[arg(long)]
    y: Option<BigRational>,
    #[arg(long)]
    alpha: Option<BigRational>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Cor4,
    Thm7,
    Expected,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
}

#[derive(clap::Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    f: Option<usize>,
    /// Inclusive range `a..b` (or a single value).
    #[arg(long)]
    n: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
}

struct Failure {
    code: u8,
    message: String,
}

fn contract(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

impl From<svtab::Error> for Failure {
    fn from(e: svtab::Error) -> Self {
        contract(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("error: {}", msg.lines().next().unwrap_or("").trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    let outcome = match cli.command {
        Command::Count(args) => count(&args),
        Command::Expected { n, t } => expected(n, t),
        Command::Series(args) => series(&args),
        Command::Verify { max_n, report, sequential } => run_verify(max_n, report, sequential),
        Command::Table(args) => table(&args),
    };
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

enum Query {
    Refined { c: usize, d: usize, e: usize },
    Rows { e: usize },
    FirstRow { m: usize },
    Cumulative,
}

fn count(a: &CountArgs) -> Outcome {
    let f = match (a.family, a.f) {
        (Family::Straight, None | Some(0)) => 0,
        (Family::Straight, Some(_)) => return Err(contract("--f applies only to the skew family")),
        (Family::Skew, Some(f)) if f >= 1 => f,
        (Family::Skew, _) => return Err(contract("the skew family needs --f >= 1")),
    };
    let query = match (a.c, a.d, a.e, a.m) {
        (Some(c), Some(d), Some(e), None) => Query::Refined { c, d, e },
        (None, None, Some(e), None) if f == 0 => Query::Rows { e },
        (None, None, None, Some(m)) if f == 0 => Query::FirstRow { m },
        (None, None, None, Some(_)) => return Err(contract("--m applies only to the straight family")),
        (None, None, None, None) => Query::Cumulative,
        _ => return Err(contract("give all of --c --d --e, or --e alone (straight), or --m alone (straight)")),
    };
    let (n, t) = (a.n, a.t);
    let value = match query {
        Query::Refined { c, d, e } => {
            let value = if f == 0 {
                formulas::count_thm1(n, t, c, d, e)?
            } else {
                formulas::count_thm6(n, f, t, c, d, e)?
            };
            feasible(f, t, c, d, e)?;
            value
        }
        Query::Rows { e } => formulas::count_cor2(n, t, e)?,
        Query::FirstRow { m } => formulas::count_cor3(n, t, m)?,
        Query::Cumulative if f == 0 => formulas::count_cor4(n, t)?,
        Query::Cumulative => formulas::count_thm7(n, f, t)?,
    };
    let oracle = a.oracle.then(|| {
        let total: u64 = match query {
            Query::Refined { c, d, e } => count_paths(n, f, t, Some((c, d, e))),
            Query::Rows { e: e0 } => weights_where(n, f, t, |_, _, e| e == e0),
            Query::FirstRow { m } => weights_where(n, f, t, |c, _, e| c + e + t == m),
            Query::Cumulative => count_paths(n, f, t, None),
        };
        BigInt::from(total)
    });
    let matched = oracle.as_ref().map(|o| *o == value);

    let params: Vec<(&str, Option<usize>)> = vec![
        ("n", Some(n)),
        ("f", Some(f)),
        ("t", Some(t)),
        ("c", a.c),
        ("d", a.d),
        ("e", a.e),
        ("m", a.m),
    ];
    let family = match a.family {
        Family::Straight => "straight",
        Family::Skew => "skew",
    };
    let verdict = |m: bool| if m { "MATCH" } else { "MISMATCH" };
    let out = match a.format {
        Format::Plain => match &oracle {
            None => format!("{value}\n"),
            Some(o) => format!("formula {value}\noracle {o}\n{}\n", verdict(matched == Some(true))),
        },
        Format::Csv => {
            let mut header: Vec<String> = vec!["family".into()];
            let mut row: Vec<String> = vec![family.into()];
            for (k, v) in &params {
                header.push((*k).into());
                row.push(v.map(|v| v.to_string()).unwrap_or_default());
            }
            header.push("count".into());
            row.push(value.to_string());
            if let Some(o) = &oracle {
                header.extend(["oracle".into(), "verdict".into()]);
                row.extend([o.to_string(), verdict(matched == Some(true)).into()]);
            }
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("family".into(), json!(family));
            for (k, v) in &params {
                if let Some(v) = v {
                    obj.insert((*k).into(), json!(v));
                }
            }
            obj.insert("count".into(), big_json(&value));
            if let Some(o) = &oracle {
                obj.insert("oracle".into(), big_json(o));
                obj.insert("verdict".into(), json!(verdict(matched == Some(true))));
            }
            format!("{}\n", Value::Object(obj))
        }
    };
    match matched {
        Some(false) => {
            print!("{out}");
            Err(Failure { code: 2, message: format!("formula {value} differs from brute force {}", oracle.unwrap()) })
        }
        _ => Ok(out),
    }
}

/// Reject refined tuples no tableau shape can carry.
fn feasible(f: usize, t: usize, c: usize, d: usize, e: usize) -> Result<(), Failure> {
    if f > e + t {
        return Err(contract(format!("invalid shape: f = {f} exceeds first-row length e + t = {}", e + t)));
    }
    if e + t == f && c > 0 {
        return Err(contract(format!("infeasible: c = {c} entries need a nonempty first row (e + t > f)")));
    }
    if e == 0 && d > 0 {
        return Err(contract(format!("infeasible: d = {d} entries need a nonempty second row (e >= 1)")));
    }
    Ok(())
}

fn weights_where(n: usize, f: usize, t: usize, keep: impl Fn(usize, usize, usize) -> bool) -> u64 {
    feasible_weights(n, f, t)
        .into_iter()
        .filter(|&(c, d, e)| keep(c, d, e))
        .map(|w| count_paths(n, f, t, Some(w)))
        .sum()
}

fn big_json(v: &BigInt) -> Value {
    i64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::String(v.to_string()))
}

fn expected(n: usize, t: usize) -> Outcome {
    match formulas::expected_thm5(n, t)? {
        Some(r) => Ok(format!("{}\n", ratio_string(&r))),
        None => Err(contract("no tableaux for these parameters")),
    }
}

fn max_order(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match std::env::var("SVT_MAX_ORDER") {
        Ok(v) => v.trim().parse().map_err(|_| contract(format!("SVT_MAX_ORDER must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn series(a: &SeriesArgs) -> Outcome {
    let cap = max_order(a.max_order)?;
    if a.order > cap {
        return Err(contract(format!("order {} exceeds the maximum {cap} (raise with --max-order or SVT_MAX_ORDER)", a.order)));
    }
    let f = match (a.family, a.f) {
        (Family::Straight, None | Some(0)) => 0,
        (Family::Straight, Some(_)) => return Err(contract("--f applies only to the skew family")),
        (Family::Skew, Some(f)) if f >= 1 => f,
        (Family::Skew, _) => return Err(contract("the skew family needs --f >= 1")),
    };
    let values = [&a.x, &a.y, &a.alpha];
    let all_integer = values.iter().all(|v| v.as_ref().is_none_or(|r| r.is_integer()));
    let build = |b: &Builder| if f == 0 { b.gf_straight(a.t) } else { b.gf_skew(f, a.t) };
    let failed = |e: svtab::Error| contract(format!("series build failed: {e}"));

    if all_integer {
        let point = Point {
            x: a.x.as_ref().map(|r| r.to_integer()),
            y: a.y.as_ref().map(|r| r.to_integer()),
            alpha: a.alpha.as_ref().map(|r| r.to_integer()),
        };
        // x = 0 or y = 0 makes a displayed denominator vanish at z^0; the
        // symbolic series has no such problem, so substitute afterwards.
        let s = match build(&Builder::at(a.order, &point)) {
            Ok(s) => s,
            Err(svtab::Error::NonExactDivision { .. }) => build(&Builder::new(a.order))
                .map_err(failed)?
                .substitute(point.x.as_ref(), point.y.as_ref(), point.alpha.as_ref()),
            Err(e) => return Err(failed(e)),
        };
        return Ok(s.dump());
    }
    let (Some(x), Some(y), Some(alpha)) = (&a.x, &a.y, &a.alpha) else {
        return Err(contract("non-integer values need all of --x --y --alpha"));
    };
    let s = build(&Builder::new(a.order)).map_err(failed)?;
    Ok(dump_rational(&s.specialize(x, y, alpha)))
}

fn run_verify(max_n: Option<usize>, report: Option<PathBuf>, sequential: bool) -> Outcome {
    let mut grid = max_n.map_or_else(Grid::default, Grid::up_to);
    if sequential {
        grid = grid.sequential();
    }
    let (reports, summary) = verify::run_all(&grid);
    if let Some(path) = &report {
        let io = |e: std::io::Error| Failure { code: 3, message: format!("cannot write report to {}: {e}", path.display()) };
        let mut sink = BufWriter::new(File::create(path).map_err(io)?);
        verify::write_report(&reports, &mut sink).map_err(io)?;
        sink.flush().map_err(io)?;
    }
    eprintln!("elapsed {:.2?}", summary.elapsed);
    let mut out = summary.table();
    for line in &summary.exclusions {
        out += &format!("excluded {line}\n");
    }
    for line in &summary.failures {
        out += &format!("FAILED {line}\n");
    }
    if summary.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure { code: 2, message: format!("{} undocumented disagreements", summary.failures.len()) })
    }
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || contract(format!("--n expects a range like 2..8, got {s:?}"));
    let num = |p: &str| p.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

fn table(a: &TableArgs) -> Outcome {
    let range = parse_range(&a.n)?;
    let TableFormat::Csv = a.format;
    let t = a.t;
    let cell = |r: svtab::Result<BigInt>| r.map(|v| v.to_string()).unwrap_or_default();
    let mut out = String::new();
    match a.which {
        Which::Cor4 => {
            out += "n,t,cor4\n";
            for n in range {
                out += &format!("{n},{t},{}\n", cell(formulas::count_cor4(n, t)));
            }
        }
        Which::Thm7 => {
            let f = match a.f {
                Some(f) if f >= 1 => f,
                _ => return Err(contract("--which thm7 needs --f >= 1")),
            };
            out += "n,f,t,thm7\n";
            for n in range {
                out += &format!("{n},{f},{t},{}\n", cell(formulas::count_thm7(n, f, t)));
            }
        }
        Which::Expected => {
            out += "n,t,expected\n";
            for n in range {
                let v = match formulas::expected_thm5(n, t) {
                    Ok(Some(r)) => ratio_string(&r),
                    _ => String::new(),
                };
                out += &format!("{n},{t},{v}\n");
            }
        }
    }
    Ok(out)
}
