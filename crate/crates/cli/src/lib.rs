//! The `qnum` command line.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! code with the text destined for standard output and standard error, so
//! tests can drive the CLI without spawning a process.

pub mod commands;
pub mod fixtures;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use qnum_core::analysis::Cubic;
use qnum_core::contfrac::Fraction;
use qnum_core::json::big_number;
use qnum_core::modular::Word;
use qnum_core::qirrational::Side;
use qnum_core::qrational::Method;
use qnum_core::ring::IntPoly;

use commands::{CfSource, RadiusTarget, SeqTarget};
use output::{Format, Report};
use verify::{Limits, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const ORDER_CEILING: i64 = 2000;
pub const DEPTH_CEILING: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "qnum", version, about = "q-deformed rational and irrational numbers")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Highest power of q kept in series.
    #[arg(long, global = true, default_value_t = 32, allow_negative_numbers = true)]
    order: i64,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

fn fraction(s: &str) -> Result<Fraction, String> {
    s.parse::<Fraction>().map_err(|e| e.to_string())
}

/// Comma separated integers. A newtype so clap takes the list as one value.
#[derive(Debug, Clone)]
struct IntList(Vec<i64>);

fn int_list(s: &str) -> Result<IntList, String> {
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}")))
        .collect::<Result<_, _>>()
        .map(IntList)
}

fn interval(s: &str) -> Result<(Fraction, Fraction), String> {
    let (a, b) = s.split_once(',').ok_or("expected an interval lo,hi")?;
    Ok((fraction(a)?, fraction(b)?))
}

fn poly(s: &str) -> Result<IntPoly, String> {
    s.parse::<IntPoly>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum MethodArg {
    All,
    Negcf,
    Regcf,
    Recurrence,
    Farey,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum Target {
    Golden,
    Silver,
    Metallic,
    Catalan,
    Motzkin,
    File,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// The q-rational [x]_q.
    Rat {
        #[arg(value_parser = fraction, allow_hyphen_values = true)]
        x: Fraction,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// The left q-rational [x]^flat_q.
    Left {
        #[arg(value_parser = fraction, allow_hyphen_values = true)]
        x: Fraction,
    },
    /// Taylor series of a q-irrational through q^order.
    Irr(IrrArgs),
    /// Closed form of the k-th metallic q-number.
    Metallic { k: u32 },
    /// Radius of convergence.
    Radius(RadiusArgs),
    /// The weighted Farey tree.
    Farey {
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// N_x M_y - M_x N_y for x > y.
    Diff {
        #[arg(value_parser = fraction, allow_hyphen_values = true)]
        x: Fraction,
        #[arg(value_parser = fraction, allow_hyphen_values = true)]
        y: Fraction,
    },
    /// Snake graph of x >= 1 and its area-weighted path count.
    Snake {
        #[arg(value_parser = fraction)]
        x: Fraction,
        /// Draw the region.
        #[arg(long)]
        ascii: bool,
    },
    /// Gaussian binomial (n choose m)_q.
    Qbinom { n: i64, m: i64 },
    /// q-deformation and trace of a word such as `T3 S T2 S T`.
    Trace {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
    /// Hankel determinants of a coefficient sequence.
    Hankel {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long, default_value_t = 12)]
        count: usize,
    },
    /// Somos-4 check on Hankel determinants or on a given sequence.
    Somos {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long, default_value_t = 40)]
        count: usize,
        /// Check this JSON array of integers directly.
        #[arg(long, conflicts_with_all = ["target", "file"])]
        values: Option<PathBuf>,
    },
    /// Vieta-type identities for the heptagon or nonagon cubic.
    Vieta {
        equation: Cubic,
        /// Also print b(q), the sum of the deformed roots.
        #[arg(long)]
        emit_b: bool,
    },
    /// One-sided limits of q-rationals approaching x.
    Stabilize {
        #[arg(value_parser = fraction, allow_hyphen_values = true)]
        x: Fraction,
        #[arg(long, default_value = "right")]
        side: Side,
        #[arg(long, default_value_t = 30)]
        count: usize,
    },
    /// Batched property suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest denominator in fraction grids; each suite has its own default.
        #[arg(long)]
        max_den: Option<u64>,
        /// Farey tree depth.
        #[arg(long, default_value_t = 10)]
        depth: usize,
        /// Number of random cases where a suite draws them.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Bundled golden values.
    Fixtures {
        /// Recompute every fixture and compare.
        #[arg(long)]
        check: bool,
        /// Recompute the regression entries and write the fixture file to PATH.
        #[arg(long, value_name = "PATH", conflicts_with = "check")]
        regenerate: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct IrrSource {
    /// Purely periodic expansion, e.g. `1` or `1,2`.
    #[arg(long, value_parser = int_list)]
    periodic: Option<IntList>,
    /// Finite prefix of an infinite expansion, e.g. `3,7,15,1`.
    #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
    prefix: Option<IntList>,
    /// File with one partial quotient per line.
    #[arg(long)]
    cf_file: Option<PathBuf>,
    /// Minimal polynomial, e.g. `x^2-x-1`; needs --interval.
    #[arg(long, value_parser = poly, requires = "interval", allow_hyphen_values = true)]
    algebraic: Option<IntPoly>,
    /// A rational number; its expansion terminates.
    #[arg(long, value_parser = fraction, allow_hyphen_values = true)]
    rational: Option<Fraction>,
}

#[derive(Debug, Args)]
struct IrrArgs {
    #[command(flatten)]
    source: IrrSource,
    /// Preperiod for --periodic.
    #[arg(long, value_parser = int_list, requires = "periodic", allow_hyphen_values = true)]
    preperiod: Option<IntList>,
    /// Isolating interval `lo,hi` for --algebraic.
    #[arg(long, value_parser = interval, allow_hyphen_values = true)]
    interval: Option<(Fraction, Fraction)>,
}

impl IrrArgs {
    fn source(self) -> Result<CfSource, String> {
        let s = self.source;
        if let Some(period) = s.periodic {
            let prefix = self.preperiod.map(|p| p.0).unwrap_or_default();
            return Ok(CfSource::Periodic { prefix, period: period.0 });
        }
        if let Some(t) = s.prefix {
            return Ok(CfSource::Prefix(t.0));
        }
        if let Some(path) = s.cf_file {
            return commands::read_cf_file(&path).map(CfSource::Prefix).map_err(|e| e.to_string());
        }
        if let Some(poly) = s.algebraic {
            let (lo, hi) = self.interval.ok_or("--algebraic needs --interval")?;
            return Ok(CfSource::Algebraic { poly, lo, hi });
        }
        if let Some(x) = s.rational {
            return Ok(CfSource::Rational(x));
        }
        Err("no continued fraction source given".into())
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct RadiusSource {
    #[arg(long)]
    metallic: Option<u32>,
    /// Purely periodic expansion, e.g. `1,2`.
    #[arg(long, value_parser = int_list)]
    periodic: Option<IntList>,
    #[arg(long, value_parser = fraction, allow_hyphen_values = true)]
    rational: Option<Fraction>,
    /// JSON series `{"valuation","order","coeffs"}` or a plain coefficient array.
    #[arg(long)]
    series_file: Option<PathBuf>,
    /// Partial quotients, one per line; expanded through --order.
    #[arg(long)]
    cf_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RadiusArgs {
    #[command(flatten)]
    source: RadiusSource,
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[arg(long, value_enum)]
    target: Option<Target>,
    /// k for --target metallic.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// JSON array of coefficients for --target file.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl SeqArgs {
    fn target(&self) -> Result<SeqTarget, String> {
        Ok(match self.target.unwrap_or(Target::Golden) {
            Target::Golden => SeqTarget::Metallic(1),
            Target::Silver => SeqTarget::Metallic(2),
            Target::Metallic => SeqTarget::Metallic(self.k.max(1)),
            Target::Catalan => SeqTarget::Catalan,
            Target::Motzkin => SeqTarget::Motzkin,
            Target::File => {
                let path = self.file.as_ref().ok_or("--target file needs --file")?;
                SeqTarget::File(commands::read_sequence(path).map_err(|e| e.to_string())?)
            }
        })
    }
}

/// What a finished invocation should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("qnum: {msg}\n") }
    }
}

fn core<T>(r: qnum_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn execute(cmd: Cmd, order: i64, seed: u64) -> Result<Report, String> {
    if !(0..=ORDER_CEILING).contains(&order) {
        return Err(format!("--order must be in 0..={ORDER_CEILING}"));
    }
    Ok(match cmd {
        Cmd::Rat { x, method } => {
            let methods = match method {
                MethodArg::All => Method::ALL.to_vec(),
                MethodArg::Negcf => vec![Method::Negcf],
                MethodArg::Regcf => vec![Method::Regcf],
                MethodArg::Recurrence => vec![Method::Recurrence],
                MethodArg::Farey => vec![Method::Farey],
            };
            commands::rat(&x, &methods)
        }
        Cmd::Left { x } => core(commands::left(&x))?,
        Cmd::Irr(args) => core(commands::irr(&args.source()?, order))?,
        Cmd::Metallic { k } => core(commands::metallic_cmd(k, order))?,
        Cmd::Radius(args) => {
            let s = args.source;
            let target = if let Some(k) = s.metallic {
                RadiusTarget::Metallic(k)
            } else if let Some(p) = s.periodic {
                RadiusTarget::Periodic(p.0)
            } else if let Some(x) = s.rational {
                RadiusTarget::Rational(x)
            } else if let Some(path) = s.series_file {
                RadiusTarget::Series(core(commands::read_series(&path))?)
            } else if let Some(path) = s.cf_file {
                RadiusTarget::Cf(CfSource::Prefix(core(commands::read_cf_file(&path))?))
            } else {
                return Err("no radius source given".into());
            };
            core(commands::radius_cmd(&target, order))?
        }
        Cmd::Farey { depth } => {
            if depth > DEPTH_CEILING {
                return Err(format!("--depth must be at most {DEPTH_CEILING}"));
            }
            commands::farey(depth)
        }
        Cmd::Diff { x, y } => core(commands::diff(&x, &y))?,
        Cmd::Snake { x, ascii } => core(commands::snake(&x, ascii))?,
        Cmd::Qbinom { n, m } => core(commands::qbinom(n, m))?,
        Cmd::Trace { word } => {
            let w: Word = core(word.join(" ").parse())?;
            commands::trace(&w)
        }
        Cmd::Hankel { seq, shift, count } => core(commands::hankel_cmd(&seq.target()?, shift, count))?,
        Cmd::Somos { seq, shift, count, values } => match values {
            Some(path) => {
                let v = core(commands::read_sequence(&path))?;
                core(commands::somos_cmd(&v, serde_json::json!(path.display().to_string())))?
            }
            None => {
                let target = seq.target()?;
                let h = core(commands::hankel_cmd(&target, shift, count))?;
                let vals = core(qnum_core::json::ints_from_json(&h.result["values"]))?;
                let label = serde_json::json!({ "target": target.name(), "shift": shift, "count": count });
                let mut r = core(commands::somos_cmd(&vals, label))?;
                r.result["values"] =
                    serde_json::Value::Array(vals.iter().map(|v| big_number(v).into()).collect());
                r
            }
        },
        Cmd::Vieta { equation, emit_b } => core(commands::vieta(equation, order, emit_b))?,
        Cmd::Stabilize { x, side, count } => core(commands::stabilize(&x, side, count, order))?,
        Cmd::Verify { suite, max_den, depth, count } => {
            let lim = Limits { max_den, depth, order, count, seed };
            lim.check()?;
            verify::report(suite, &lim)
        }
        Cmd::Fixtures { check, regenerate } => match (check, regenerate) {
            (_, Some(path)) => fixtures::regenerate(&path)?,
            (true, None) => fixtures::check(),
            (false, None) => fixtures::list(),
        },
    })
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = cli.format;
    let report = match execute(cli.cmd, cli.order, cli.seed) {
        Ok(r) => r,
        Err(msg) => return Outcome::usage(msg),
    };
    let Some(stdout) = report.render(format) else {
        return Outcome::usage(format!(
            "{} has no {:?} output",
            report.command,
            format
        ));
    };
    Outcome {
        code: if report.ok { EXIT_OK } else { EXIT_VERIFY_FAILED },
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_lists() {
        assert_eq!(int_list("1,2, 3").unwrap().0, [1, 2, 3]);
        assert_eq!(int_list("-1").unwrap().0, [-1]);
        assert!(int_list("1,x").is_err());
    }

    #[test]
    fn intervals() {
        let (a, b) = interval("1,3/2").unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("1".into(), "3/2".into()));
        assert!(interval("1").is_err());
    }

    #[test]
    fn order_is_capped() {
        let out = run(["qnum", "irr", "--periodic", "1", "--order", "5000"]);
        assert_eq!(out.code, EXIT_USAGE);
    }
}
