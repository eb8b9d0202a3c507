//! Command-line front end. The `deligne` binary is a thin wrapper around
//! [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bisym::{BiSymFunc, PairKey};
use crate::deligne::{
    coset_sign, expand_in_s_basis, mixed_jacobi_trudi, mixed_jacobi_trudi_complete, s_class,
    tensor_structure_constants, SignRule,
};
use crate::error::Error;
use crate::partition::{partitions_up_to, Partition};
use crate::specialize::specialize_to_gl_n;
use crate::symfunc::lr_expand;
use crate::verify::{self, SuiteReport};

/// Environment variable capping the worker threads used by parallel suites.
pub const THREADS_ENV: &str = "DELIGNE_THREADS";

#[derive(Parser, Debug)]
#[command(name = "deligne", about = "Classes of indecomposables in the Grothendieck ring of Rep(GL_t)")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// S_{λ,μ} in the Schur⊗Schur basis, or as the mixed h-determinant expansion.
    Sclass {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, value_enum, default_value = "schur")]
        basis: OutputBasis,
    },
    /// Multiplicities of X_{κ,σ} in X_a ⊗ X_b. Pairs are written `λ;μ` or `[λ],[μ]`.
    Tensor {
        #[arg(long, value_parser = parse_pair)]
        a: PairKey,
        #[arg(long, value_parser = parse_pair)]
        b: PairKey,
    },
    /// Rewrites a Schur⊗Schur JSON element in the basis of classes S_{λ,μ}.
    Expand {
        #[arg(long)]
        input: PathBuf,
    },
    /// The GL_n character of X_{λ,μ}.
    Specialize {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Runs a self-check suite; exits 1 on failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Times one kernel over all inputs up to a size.
    Bench {
        #[arg(long, value_enum)]
        op: BenchOp,
        #[arg(long)]
        size: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputBasis {
    Schur,
    Hdet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Detsum,
    Omega,
    Genfun,
    Cauchy,
    Detshift,
    #[value(name = "f_n")]
    FN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchOp {
    Lr,
    Sclass,
    Det,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::from_str(s).map_err(|e| e.to_string())
}

/// Accepts `λ;μ` (e.g. `2,1;1`) or bracketed `[λ],[μ]` (e.g. `[2,1],[1]`).
fn parse_pair(s: &str) -> Result<PairKey, String> {
    let t = s.trim();
    let split = if t.starts_with('[') {
        t.find(']').and_then(|i| {
            let rest = t[i + 1..].trim_start().strip_prefix(',')?;
            Some((&t[..=i], rest))
        })
    } else {
        t.split_once(';')
    };
    let (l, m) = split.ok_or_else(|| format!("expected `lambda;mu` or `[lambda],[mu]`, got {s:?}"))?;
    Ok(PairKey::new(parse_partition(l)?, parse_partition(m)?))
}

/// Applies `DELIGNE_THREADS` to the global thread pool, if set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| format!("{THREADS_ENV} must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err(format!("{THREADS_ENV} must be positive"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

/// Parses `args` (including the program name), runs the command, and returns
/// the exit code: 0 on success, 1 when a verification fails, 2 on usage
/// errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_sign_rule(args, out, err, coset_sign)
}

/// [`run`] with the sign rule used by the determinant in `verify --suite
/// detsum` replaced.
pub fn run_with_sign_rule<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, sign_rule: SignRule) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli, out, sign_rule) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write, sign_rule: SignRule) -> Result<i32, CliError> {
    let format = cli.format;
    let json_default = |f: Option<Format>| f.unwrap_or(Format::Json) == Format::Json;
    let text_default = |f: Option<Format>| f.unwrap_or(Format::Text) == Format::Json;
    match cli.command {
        Command::Sclass { lambda, mu, basis } => match basis {
            OutputBasis::Schur => {
                let f = s_class(&lambda, &mu);
                if json_default(format) {
                    print_json(out, &f)?;
                } else {
                    writeln!(out, "{f}")?;
                }
            }
            OutputBasis::Hdet => {
                let h = mixed_jacobi_trudi_complete(&lambda, &mu);
                if json_default(format) {
                    print_json(out, &h)?;
                } else {
                    writeln!(out, "{h}")?;
                }
            }
        },
        Command::Tensor { a, b } => {
            let c = tensor_structure_constants(&a, &b);
            if json_default(format) {
                print_json(out, &c)?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Command::Expand { input } => {
            let text = std::fs::read_to_string(&input).map_err(|e| {
                std::io::Error::new(e.kind(), format!("cannot read {}: {e}", input.display()))
            })?;
            let f: BiSymFunc = serde_json::from_str(&text)?;
            let e = expand_in_s_basis(&f);
            if json_default(format) {
                print_json(out, &e)?;
            } else {
                writeln!(out, "{e}")?;
            }
        }
        Command::Specialize { lambda, mu, n } => {
            let sig = crate::specialize::signature_of(&lambda, &mu, n)?;
            let ch = specialize_to_gl_n(&s_class(&lambda, &mu), n);
            if text_default(format) {
                #[derive(Serialize)]
                struct Term {
                    exponents: Vec<i32>,
                    coeff: String,
                }
                #[derive(Serialize)]
                struct Character {
                    signature: Vec<i64>,
                    terms: Vec<Term>,
                }
                let terms = ch
                    .terms()
                    .iter()
                    .map(|(e, c)| Term { exponents: e.clone(), coeff: c.to_string() })
                    .collect();
                print_json(out, &Character { signature: sig.entries().to_vec(), terms })?;
            } else {
                writeln!(out, "{ch}")?;
            }
        }
        Command::Verify { suite, max_size, degree } => {
            let report = run_suite(suite, max_size, degree, sign_rule)?;
            if text_default(format) {
                #[derive(Serialize)]
                struct Json<'a> {
                    #[serde(flatten)]
                    report: &'a SuiteReport,
                    passed: bool,
                }
                print_json(out, &Json { report: &report, passed: report.passed() })?;
            } else {
                write!(out, "{report}")?;
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Bench { op, size } => {
            let (items, elapsed) = bench(op, size);
            let name = format!("{op:?}").to_lowercase();
            if text_default(format) {
                #[derive(Serialize)]
                struct Bench {
                    op: String,
                    size: usize,
                    items: usize,
                    elapsed_ms: f64,
                }
                print_json(out, &Bench { op: name, size, items, elapsed_ms: elapsed * 1e3 })?;
            } else {
                writeln!(out, "op: {name}")?;
                writeln!(out, "size: {size}")?;
                writeln!(out, "items: {items}")?;
                writeln!(out, "elapsed: {:.3} ms", elapsed * 1e3)?;
                if items > 0 {
                    writeln!(out, "per item: {:.3} us", elapsed * 1e6 / items as f64)?;
                }
            }
        }
    }
    Ok(0)
}

fn run_suite(
    suite: Suite,
    max_size: Option<usize>,
    degree: Option<usize>,
    sign_rule: SignRule,
) -> Result<SuiteReport, Error> {
    Ok(match suite {
        Suite::Detsum => verify::detsum(max_size.unwrap_or(5), sign_rule),
        Suite::Omega => verify::omega(max_size.unwrap_or(5)),
        Suite::Genfun => verify::genfun(degree.unwrap_or(6))?,
        Suite::Cauchy => verify::cauchy(max_size.unwrap_or(3), degree.unwrap_or(5), 4)?,
        Suite::Detshift => verify::detshift(max_size.unwrap_or(5)),
        Suite::FN => verify::f_n(max_size.unwrap_or(4), 4),
    })
}

fn bench(op: BenchOp, size: usize) -> (usize, f64) {
    let ps = partitions_up_to(size);
    let start = Instant::now();
    let mut items = 0;
    for l in &ps {
        for m in &ps {
            match op {
                BenchOp::Lr => {
                    std::hint::black_box(lr_expand(l, m));
                }
                BenchOp::Sclass => {
                    std::hint::black_box(s_class(l, m));
                }
                BenchOp::Det => {
                    std::hint::black_box(mixed_jacobi_trudi(l, m));
                }
            }
            items += 1;
        }
    }
    (items, start.elapsed().as_secs_f64())
}
