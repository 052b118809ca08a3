//! The `dualpoly` command line: triangles, sequences and identity checks.
//!
//! Triangle specs:
//!
//! | spec            | array |
//! |-----------------|-------|
//! | `fib`           | `(1/(1-x²), x/(1-x²))`, coefficients of `F_{n+1}` |
//! | `dual-fib`      | `[I_1(2ix)/(ix), -x]`, coefficients of `F̂_{n+1}` |
//! | `x1x`           | `(1, x(1+x))` |
//! | `tilde`         | `(1, x(1+x))^!` |
//! | `a011973`       | `(1/(1-x), x²/(1-x))` |
//! | `tildetilde`    | `(1/(1-x), x²/(1-x))^!` |
//! | `a111959`       | `(1/sqrt(1-4x²), x/sqrt(1-4x²))` |
//! | `i0-dual`       | `[I_0(2ix), -x]` |
//! | `cf@A`          | coefficients of `CF_{n+1}` in `b`, at `a = A` |
//! | `cf-matrix@B`   | coefficients of `CF_{n+1}` in `a`, at `b = B` |
//! | `gf:EXPR`       | the array whose bivariate GF in `x`, `y` is `EXPR` |
//!
//! A trailing `!` inverts, so `rowsums:fib!` is the row sums of `fib^!`.
//!
//! Sequence specs: `dual-cf@Y`, `rowsums:TRIANGLE`, `hankel:SEQUENCE`,
//! `gf:EXPR`, `family:NAME` and `family:NAME@Y`.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::exact::{Rational, Ring};
use crate::families::{self, FamilyError, PolyFamily, YPoly};
use crate::gfparse::{self, AnySeries, EvalError, ParseError};
use crate::hankel::{hankel_transform, HankelError};
use crate::series::DEFAULT_ORDER;
use crate::triangles::{Triangle, TriangleError};
use crate::verify::{self, Suite, UnknownSuite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Aligned text
    Table,
    /// Comma separated, no header
    Csv,
    /// Arrays of strings
    Json,
    /// OEIS b-file lines "n a(n)"; sequences only
    Bfile,
}

#[derive(Debug, Parser)]
#[command(name = "dualpoly", version, about = "Exact Riordan arrays, triangle inversions and dual polynomial families")]
pub struct Cli {
    /// Series truncation order
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// First index in b-file output
    #[arg(long, global = true, default_value_t = 0, allow_negative_numbers = true)]
    pub offset: i64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a coefficient triangle
    Triangle {
        /// Named triangle (fib, dual-fib, x1x, tilde, a011973, tildetilde, a111959, i0-dual, cf@A, cf-matrix@B)
        #[arg(required_unless_present = "gf", conflicts_with = "gf")]
        spec: Option<String>,
        /// Bivariate generating function in x and y
        #[arg(long)]
        gf: Option<String>,
        #[arg(long, default_value_t = 8)]
        rows: usize,
        /// Print the inversion T^! instead
        #[arg(long)]
        invert: bool,
    },
    /// Print a sequence
    Sequence {
        /// dual-cf@Y, rowsums:TRIANGLE, hankel:SEQUENCE, gf:EXPR, family:NAME[@Y]
        spec: String,
        /// Number of terms
        #[arg(short = 'n', long = "terms", default_value_t = 10)]
        terms: usize,
    },
    /// Run identity checks
    Verify {
        /// duality, lagrange, hankel, paths, fundamental, involution, rowsums, discrepancies or all
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown triangle {0:?}")]
    UnknownTriangle(String),
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("{spec:?}: {reason}")]
    BadParameter { spec: String, reason: String },
    #[error("{}", caret(.input, .error.offset, &.error.to_string()))]
    Parse { input: String, error: ParseError },
    #[error("{}", caret(.input, .error.span.start, &.error.to_string()))]
    Eval { input: String, error: EvalError },
    #[error("expression is only determined to order {got}, {needed} terms requested; raise --order")]
    OrderTooLow { got: usize, needed: usize },
    #[error("{0} has polynomial terms; only exact numbers are allowed here")]
    NotNumeric(String),
    #[error("b-file output applies only to single sequences")]
    BfileNeedsSequence,
    #[error(transparent)]
    Triangle(#[from] TriangleError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hankel(#[from] HankelError),
    #[error(transparent)]
    Suite(#[from] UnknownSuite),
}

fn caret(source: &str, offset: usize, message: &str) -> String {
    format!("{message}\n  {source}\n  {}^", " ".repeat(offset))
}

fn parse_rational(spec: &str, text: &str) -> Result<Rational, CliError> {
    text.trim().parse::<Rational>().map_err(|_| CliError::BadParameter {
        spec: spec.to_string(),
        reason: format!("{text:?} is not an integer or p/q"),
    })
}

fn parse_expr(text: &str) -> Result<gfparse::GfAst, CliError> {
    gfparse::parse(text).map_err(|error| CliError::Parse { input: text.to_string(), error })
}

/// The triangle named by `spec`, with `rows` rows.
pub fn resolve_triangle(spec: &str, rows: usize, order: usize) -> Result<Triangle<Rational>, CliError> {
    if let Some(base) = spec.strip_suffix('!') {
        return Ok(resolve_triangle(base, rows, order)?.invert()?);
    }
    if let Some(expr) = spec.strip_prefix("gf:") {
        return triangle_from_gf(expr, rows, order);
    }
    if let Some(a) = spec.strip_prefix("cf@") {
        return Ok(families::cf_b_array(&parse_rational(spec, a)?, rows));
    }
    if let Some(b) = spec.strip_prefix("cf-matrix@") {
        return Ok(families::cf_matrix(&parse_rational(spec, b)?, rows));
    }
    Ok(match spec {
        "fib" => families::fibonacci_triangle(rows),
        "dual-fib" => families::dual_fibonacci_triangle(rows),
        "x1x" => families::x1x_triangle(rows),
        "tilde" => families::tilde_triangle(rows),
        "a011973" => families::a011973_triangle(rows),
        "tildetilde" => families::tildetilde_triangle(rows),
        "a111959" => families::a111959_triangle(rows),
        "i0-dual" => families::i0_dual_triangle(rows),
        _ => return Err(CliError::UnknownTriangle(spec.to_string())),
    })
}

fn triangle_from_gf(expr: &str, rows: usize, order: usize) -> Result<Triangle<Rational>, CliError> {
    let ast = parse_expr(expr)?;
    let series = gfparse::eval_ast::<YPoly>(&ast, order.max(rows))
        .map_err(|error| CliError::Eval { input: expr.to_string(), error })?;
    Ok(Triangle::from_bgf(&series, rows)?)
}

/// Terms of a sequence: exact numbers, or rendered polynomials.
#[derive(Debug, Clone, PartialEq)]
pub enum SeqValues {
    Exact(Vec<Rational>),
    Symbolic(Vec<String>),
}

impl SeqValues {
    pub fn rendered(&self) -> Vec<String> {
        match self {
            SeqValues::Exact(v) => v.iter().map(|q| q.to_string()).collect(),
            SeqValues::Symbolic(v) => v.clone(),
        }
    }
}

fn exact(spec: &str, v: SeqValues) -> Result<Vec<Rational>, CliError> {
    match v {
        SeqValues::Exact(v) => Ok(v),
        SeqValues::Symbolic(_) => Err(CliError::NotNumeric(spec.to_string())),
    }
}

/// The first `n` terms of the sequence named by `spec`.
pub fn resolve_sequence(spec: &str, n: usize, order: usize) -> Result<SeqValues, CliError> {
    if let Some(y) = spec.strip_prefix("dual-cf@") {
        let y = parse_rational(spec, y)?;
        return Ok(SeqValues::Exact(verify::dual_cf_values(&y, n)));
    }
    if let Some(tri) = spec.strip_prefix("rowsums:") {
        return Ok(SeqValues::Exact(resolve_triangle(tri, n, order)?.row_sums()));
    }
    if let Some(inner) = spec.strip_prefix("hankel:") {
        if n == 0 {
            return Ok(SeqValues::Exact(Vec::new()));
        }
        let seq = exact(inner, resolve_sequence(inner, 2 * n - 1, order)?)?;
        return Ok(SeqValues::Exact(hankel_transform(&seq, n - 1)?));
    }
    if let Some(expr) = spec.strip_prefix("gf:") {
        return sequence_from_gf(expr, n, order);
    }
    if let Some(rest) = spec.strip_prefix("family:") {
        let (name, at) = match rest.split_once('@') {
            Some((name, y)) => (name, Some(parse_rational(spec, y)?)),
            None => (rest, None),
        };
        let family: PolyFamily = name.parse()?;
        let polys: Vec<YPoly> = (0..n).map(|i| families::family_poly(family, i)).collect();
        return Ok(match at {
            Some(y) => SeqValues::Exact(polys.iter().map(|p| p.eval(&y)).collect()),
            None => SeqValues::Symbolic(polys.iter().map(|p| p.render(&["y"])).collect()),
        });
    }
    Err(CliError::UnknownSequence(spec.to_string()))
}

fn sequence_from_gf(expr: &str, n: usize, order: usize) -> Result<SeqValues, CliError> {
    let ast = parse_expr(expr)?;
    let series = gfparse::eval_auto(&ast, order.max(n))
        .map_err(|error| CliError::Eval { input: expr.to_string(), error })?;
    if series.order() < n {
        return Err(CliError::OrderTooLow { got: series.order(), needed: n });
    }
    Ok(match series {
        AnySeries::Rational(s) => {
            let mut v = s.into_coeffs();
            v.truncate(n);
            SeqValues::Exact(v)
        }
        other => {
            let mut v = other.rendered_coeffs();
            v.truncate(n);
            SeqValues::Symbolic(v)
        }
    })
}

fn json_array(items: &[String]) -> serde_json::Value {
    serde_json::Value::Array(items.iter().cloned().map(serde_json::Value::String).collect())
}

pub fn render_triangle(t: &Triangle<Rational>, format: OutputFormat) -> Result<String, CliError> {
    let cells: Vec<Vec<String>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|q| q.render(&[])).collect())
        .collect();
    let mut out = String::new();
    match format {
        OutputFormat::Table => {
            let cols = cells.last().map_or(0, Vec::len);
            let widths: Vec<usize> = (0..cols)
                .map(|k| cells.iter().filter_map(|r| r.get(k)).map(String::len).max().unwrap_or(0))
                .collect();
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("{c:>w$}", w = widths[k]))
                    .collect();
                writeln!(out, "{}", line.join(" ")).expect("string write");
            }
        }
        OutputFormat::Csv => {
            for row in &cells {
                writeln!(out, "{}", row.join(",")).expect("string write");
            }
        }
        OutputFormat::Json => {
            let v = serde_json::Value::Array(cells.iter().map(|r| json_array(r)).collect());
            writeln!(out, "{v}").expect("string write");
        }
        OutputFormat::Bfile => return Err(CliError::BfileNeedsSequence),
    }
    Ok(out)
}

pub fn render_sequence(values: &SeqValues, format: OutputFormat, offset: i64) -> Result<String, CliError> {
    let items = values.rendered();
    Ok(match format {
        OutputFormat::Table => match values {
            SeqValues::Exact(_) => format!("{}\n", items.join(" ")),
            SeqValues::Symbolic(_) => items.iter().map(|s| format!("{s}\n")).collect(),
        },
        OutputFormat::Csv => format!("{}\n", items.join(",")),
        OutputFormat::Json => format!("{}\n", json_array(&items)),
        OutputFormat::Bfile => {
            if matches!(values, SeqValues::Symbolic(_)) {
                return Err(CliError::NotNumeric("b-file output".to_string()));
            }
            items
                .iter()
                .enumerate()
                .map(|(i, s)| format!("{} {s}\n", offset + i as i64))
                .collect()
        }
    })
}

/// Output text and whether the command succeeded.
pub fn execute(cli: &Cli) -> Result<(String, bool), CliError> {
    match &cli.command {
        Command::Triangle { spec, gf, rows, invert } => {
            let mut t = match gf {
                Some(expr) => triangle_from_gf(expr, *rows, cli.order)?,
                None => resolve_triangle(spec.as_deref().expect("required by clap"), *rows, cli.order)?,
            };
            if *invert {
                t = t.invert()?;
            }
            Ok((render_triangle(&t, cli.format)?, true))
        }
        Command::Sequence { spec, terms } => {
            let v = resolve_sequence(spec, *terms, cli.order)?;
            Ok((render_sequence(&v, cli.format, cli.offset)?, true))
        }
        Command::Verify { suite } => {
            let report = if suite == "all" {
                verify::run_all()
            } else {
                verify::run(suite.parse::<Suite>()?)
            };
            Ok((format!("{report}\n"), report.passed()))
        }
    }
}

/// Parse arguments, run, print, and map the outcome to an exit code:
/// 0 on success, 1 when a verify check fails, 2 on any error.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
