//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on bad
//! arguments. Diagnostics go to the error stream.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use skewdyck_core::asymptotics::{self, convergence_report, ln_bigint};
use skewdyck_core::dp::{CountMode, DpTable};
use skewdyck_core::holonomic::{avoidance_initial_terms, extend};
use skewdyck_core::kernel::{self, Mode};
use skewdyck_core::path::{parse_word, SkewPath};
use skewdyck_core::series::solve_algebraic;
use skewdyck_core::{AlgEquation, Ring, TPoly, ZSeries};

use crate::format::{
    int_tpoly_strings, rational_string, scientific_from_ln, series_json, series_text,
    tpoly_strings, track_series_json, track_series_text, SequencePayload,
};
use crate::svg::{render_svg, SvgOptions};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_ASYMPT_N: [usize; 6] = [50, 100, 200, 400, 800, 1600];

/// What to do with the `t` marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TEval {
    Track,
    Zero,
    One,
    Value(BigRational),
}

impl TEval {
    /// `None` keeps `t` symbolic.
    fn value(&self) -> Option<BigRational> {
        match self {
            TEval::Track => None,
            TEval::Zero => Some(BigRational::zero()),
            TEval::One => Some(BigRational::one()),
            TEval::Value(v) => Some(v.clone()),
        }
    }
}

impl FromStr for TEval {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "track" => Ok(TEval::Track),
            "zero" => Ok(TEval::Zero),
            "one" => Ok(TEval::One),
            _ => s
                .parse::<BigRational>()
                .map(TEval::Value)
                .map_err(|_| format!("expected track, zero, one or a rational p/q, got {s:?}")),
        }
    }
}

impl fmt::Display for TEval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TEval::Track => f.write_str("track"),
            TEval::Zero => f.write_str("zero"),
            TEval::One => f.write_str("one"),
            TEval::Value(v) => f.write_str(&rational_string(v)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Tsv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "skewdyck",
    version,
    about = "Skew Dyck paths with the up-down-red factor forbidden or counted"
)]
pub struct Cli {
    /// Number of coefficients (or the check depth for `verify`).
    #[arg(long, global = true, default_value_t = 16)]
    pub order: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Index series by half-length instead of length.
    #[arg(long, global = true)]
    pub half_length: bool,

    /// track, zero, one or a rational p/q.
    #[arg(long, global = true)]
    pub t_eval: Option<TEval>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Paths of length M ending at level K (default: t tracked).
    Count { m: usize, k: usize },
    /// Level-0 series from the counting cubic (default: t = 0).
    Series,
    /// Rows of the counting triangle by half-length.
    Bivariate,
    /// Series of paths ending at level K (default: t = 0).
    Levels { k: usize },
    /// Cross-check every independent route; exit 1 on any failure.
    Verify,
    /// Compare coefficients with the asymptotic estimate.
    Asympt {
        /// Comma-separated indices.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
    },
    /// Draw a path given as a word over U, D, R.
    Render {
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        unit_px: u32,
    },
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn internal(e: impl fmt::Display) -> Failure {
    Failure {
        code: EXIT_CHECK_FAILED,
        message: e.to_string(),
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "skewdyck: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = match &cli.command {
        Command::Count { m, k } => count(cli, *m, *k)?,
        Command::Series => series(cli)?,
        Command::Bivariate => bivariate(cli)?,
        Command::Levels { k } => levels(cli, *k)?,
        Command::Verify => return verify(cli, out),
        Command::Asympt { n } => asympt(cli, n)?,
        Command::Render {
            word,
            out: path,
            unit_px,
        } => {
            let svg = render(word, *unit_px)?;
            if let Some(path) = path {
                std::fs::write(path, svg)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                return Ok(EXIT_OK);
            }
            svg
        }
    };
    out.write_all(text.as_bytes()).map_err(internal)?;
    Ok(EXIT_OK)
}

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}

fn t_mode(cli: &Cli, default: TEval) -> TEval {
    cli.t_eval.clone().unwrap_or(default)
}

fn count(cli: &Cli, m: usize, k: usize) -> Result<String, Failure> {
    let mode = t_mode(cli, TEval::Track);
    let weight = DpTable::build(m)
        .count(m, k, CountMode::Track)
        .into_weight();
    let value = mode.value().map(|v| weight.to_rational().eval(&v));
    Ok(match (cli.format, value) {
        (OutputFormat::Json, value) => json_line(&json!({
            "m": m,
            "k": k,
            "t_mode": mode.to_string(),
            "count": match value {
                Some(v) => Value::String(rational_string(&v)),
                None => json!(int_tpoly_strings(&weight)),
            },
        })),
        (OutputFormat::Tsv, None) => {
            format!("{m}\t{k}\t{}\n", int_tpoly_strings(&weight).join("\t"))
        }
        (OutputFormat::Tsv, Some(v)) => format!("{m}\t{k}\t{}\n", rational_string(&v)),
        (OutputFormat::Text, None) => format!("{weight}\n"),
        (OutputFormat::Text, Some(v)) => format!("{}\n", rational_string(&v)),
    })
}

/// `t` substituted by a constant in an equation over `Q[t]`.
fn substitute(eq: &AlgEquation<TPoly<BigRational>>, v: &BigRational) -> AlgEquation<BigRational> {
    AlgEquation::new(
        eq.coeffs()
            .iter()
            .map(|row| row.iter().map(|p| p.eval(v)).collect())
            .collect(),
    )
}

/// A series either with `t` symbolic or evaluated.
enum Output {
    Track(ZSeries<TPoly<BigRational>>),
    Scalar(ZSeries<BigRational>),
}

impl Output {
    fn expand_even(self, order: usize) -> Output {
        match self {
            Output::Track(s) => Output::Track(s.expand_even().truncate(order)),
            Output::Scalar(s) => Output::Scalar(s.expand_even().truncate(order)),
        }
    }

    fn compress_even(self) -> Option<Output> {
        Some(match self {
            Output::Track(s) => Output::Track(s.compress_even()?),
            Output::Scalar(s) => Output::Scalar(s.compress_even()?),
        })
    }

    fn truncate(self, order: usize) -> Output {
        match self {
            Output::Track(s) => Output::Track(s.truncate(order)),
            Output::Scalar(s) => Output::Scalar(s.truncate(order)),
        }
    }

    fn render(&self, format: OutputFormat, half: bool, mode: &TEval) -> String {
        match format {
            OutputFormat::Json => json_line(&SequencePayload {
                sequence: match self {
                    Output::Track(s) => track_series_json(s),
                    Output::Scalar(s) => series_json(s),
                },
                variable: if half { "z(half)" } else { "z" },
                t_mode: mode.to_string(),
            }),
            OutputFormat::Tsv => {
                let rows: Vec<String> = match self {
                    Output::Track(s) => s
                        .coeffs()
                        .iter()
                        .map(|p| tpoly_strings(p).join("\t"))
                        .collect(),
                    Output::Scalar(s) => s.coeffs().iter().map(rational_string).collect(),
                };
                rows.iter()
                    .enumerate()
                    .map(|(n, r)| format!("{n}\t{r}\n"))
                    .collect()
            }
            OutputFormat::Text => {
                let body = match self {
                    Output::Track(s) => track_series_text(s),
                    Output::Scalar(s) => series_text(s),
                };
                if body.is_empty() {
                    body
                } else {
                    body + "\n"
                }
            }
        }
    }
}

fn check_order(order: usize) -> Result<(), Failure> {
    if order == 0 {
        return Err(usage("--order must be at least 1"));
    }
    Ok(())
}

fn solve_counting(half_order: usize, mode: &TEval) -> Result<Output, Failure> {
    match mode.value() {
        None => solve_algebraic(&kernel::counting_cubic(), &TPoly::one(), half_order)
            .map(Output::Track)
            .map_err(internal),
        Some(v) => solve_algebraic(
            &substitute(&kernel::counting_cubic(), &v),
            &BigRational::one(),
            half_order,
        )
        .map(Output::Scalar)
        .map_err(internal),
    }
}

fn series(cli: &Cli) -> Result<String, Failure> {
    check_order(cli.order)?;
    let mode = t_mode(cli, TEval::Zero);
    let s = if cli.half_length {
        solve_counting(cli.order, &mode)?
    } else {
        solve_counting(cli.order / 2 + 1, &mode)?.expand_even(cli.order)
    };
    Ok(s.render(cli.format, cli.half_length, &mode))
}

fn bivariate(cli: &Cli) -> Result<String, Failure> {
    check_order(cli.order)?;
    let mode = t_mode(cli, TEval::Track);
    if mode != TEval::Track {
        return Err(usage(
            "bivariate keeps t symbolic; use `series --t-eval` for a value",
        ));
    }
    // rows are always indexed by half-length
    let s = solve_counting(cli.order, &mode)?;
    let text = match (cli.format, &s) {
        (OutputFormat::Text, Output::Track(s)) => s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, p)| format!("{n}: {}\n", tpoly_strings(p).join(" ")))
            .collect(),
        _ => s.render(cli.format, true, &mode),
    };
    Ok(text)
}

fn levels(cli: &Cli, k: usize) -> Result<String, Failure> {
    check_order(cli.order)?;
    let mode = t_mode(cli, TEval::Zero);
    let full_order = if cli.half_length {
        2 * cli.order
    } else {
        cli.order
    };
    let s = match mode.value() {
        Some(v) if v.is_zero() => {
            let s = kernel::level_gf(k, full_order, Mode::Univariate).map_err(internal)?;
            Output::Scalar(kernel::at_t_zero(&s))
        }
        None => Output::Track(kernel::level_gf(k, full_order, Mode::Bivariate).map_err(internal)?),
        Some(v) => {
            let s = kernel::level_gf(k, full_order, Mode::Bivariate).map_err(internal)?;
            Output::Scalar(s.map(|p| p.eval(&v)))
        }
    };
    let s = if cli.half_length {
        s.compress_even()
            .ok_or_else(|| {
                usage(format!(
                    "level {k} is odd; --half-length needs an even level"
                ))
            })?
            .truncate(cli.order)
    } else {
        s
    };
    Ok(s.render(cli.format, cli.half_length, &mode))
}

fn verify(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    check_order(cli.order)?;
    let results = verify::run_checks(&verify::standard_checks(), cli.order);
    let all = results.iter().all(verify::CheckResult::passed);
    let text = match cli.format {
        OutputFormat::Json => json_line(&json!({
            "order": cli.order,
            "passed": all,
            "checks": results.iter().map(|r| json!({
                "name": r.name,
                "passed": r.passed(),
                "detail": match &r.outcome { Ok(d) | Err(d) => d },
            })).collect::<Vec<_>>(),
        })),
        OutputFormat::Tsv => results
            .iter()
            .map(|r| {
                let (status, detail) = match &r.outcome {
                    Ok(d) => ("PASS", d),
                    Err(d) => ("FAIL", d),
                };
                format!("{status}\t{}\t{detail}\n", r.name)
            })
            .collect(),
        OutputFormat::Text => {
            let mut s: String = results.iter().map(|r| r.line() + "\n").collect();
            let passed = results.iter().filter(|r| r.passed()).count();
            s += &format!("{passed} of {} checks passed\n", results.len());
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(internal)?;
    Ok(if all { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn asympt(cli: &Cli, n_values: &[usize]) -> Result<String, Failure> {
    let n_values = if n_values.is_empty() {
        DEFAULT_ASYMPT_N.to_vec()
    } else {
        n_values.to_vec()
    };
    let last = n_values.iter().copied().max().unwrap_or(0).max(3);
    let seq: Vec<BigInt> = extend(&avoidance_initial_terms(), last).map_err(internal)?;
    let rows = convergence_report(&n_values, &seq).map_err(internal)?;
    let c = asymptotics::constants();
    Ok(match cli.format {
        OutputFormat::Json => json_line(&json!({
            "z0": c.z0,
            "growth": c.growth,
            "amplitude": c.amplitude,
            "rows": rows.iter().map(|r| json!({
                "n": r.n,
                "coefficient": r.coefficient.to_string(),
                "estimate": scientific_from_ln(r.ln_estimate),
                "ratio": r.ratio,
            })).collect::<Vec<_>>(),
        })),
        OutputFormat::Tsv => {
            let mut s = String::from("n\tcoefficient\testimate\tratio\n");
            for r in &rows {
                s += &format!(
                    "{}\t{}\t{}\t{:.6}\n",
                    r.n,
                    r.coefficient,
                    scientific_from_ln(r.ln_estimate),
                    r.ratio
                );
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!(
                "{:>6}  {:>14}  {:>14}  {:>8}\n",
                "n", "s_n", "estimate", "ratio"
            );
            for r in &rows {
                let coeff = if r.coefficient.is_zero() {
                    "0".to_string()
                } else {
                    scientific_from_ln(ln_bigint(&r.coefficient))
                };
                s += &format!(
                    "{:>6}  {:>14}  {:>14}  {:>8.6}\n",
                    r.n,
                    coeff,
                    scientific_from_ln(r.ln_estimate),
                    r.ratio
                );
            }
            s
        }
    })
}

fn render(word: &str, unit_px: u32) -> Result<String, Failure> {
    if unit_px == 0 {
        return Err(usage("--unit-px must be positive"));
    }
    let steps = parse_word(word).map_err(|c| usage(format!("unknown step letter {c:?}")))?;
    let path = SkewPath::new(steps).map_err(|v| usage(format!("not a valid path: {v}")))?;
    Ok(render_svg(
        &path,
        &SvgOptions {
            unit_px,
            ..SvgOptions::default()
        },
    ))
}
