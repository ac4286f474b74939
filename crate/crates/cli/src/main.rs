//! `wpoly`: compute and certify W-polynomials from the command line.
//!
//! Exit codes: 0 ok, 1 generic failure, 2 bad poset input, 4 enumeration
//! budget exceeded, 10 polynomial is not real-rooted (`check` only).

mod render;
mod verify;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use wpoly_core::asymptotics;
use wpoly_core::closed::{eulerian_polynomial, w_disjoint_chains, w_pmn};
use wpoly_core::linext::{w_polynomial_enumerative, DEFAULT_BUDGET};
use wpoly_core::realroots::analyze;
use wpoly_core::search::{minimal_counterexamples, scan, MinimalOrder};
use wpoly_core::{Error as CoreError, IntPolynomial, Poset};

const EXIT_FAILURE: u8 = 1;
const EXIT_BAD_POSET: u8 = 2;
const EXIT_BUDGET: u8 = 4;
const EXIT_NOT_REAL_ROOTED: u8 = 10;

#[derive(Parser, Debug)]
#[command(
    name = "wpoly",
    version,
    about = "Descent polynomials of labeled posets and their real roots"
)]
struct Cli {
    /// Worker threads for parallel commands
    #[arg(long, global = true, env = "WPOLY_JOBS")]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    #[value(name = "enum")]
    Enumerate,
    Formula,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Two chains m and n plus the cover m+1 < m
    Pmn,
    /// Disjoint union of the chains m and n
    Chains,
    /// p pairwise incomparable elements
    Antichain,
    /// A single chain on p elements
    Chain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    BySum,
    ByDegree,
}

#[derive(Args, Debug)]
struct Source {
    /// Poset file in the `poset <p>` / `cover <a> <b>` text format
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,

    #[arg(long, value_enum, required_unless_present = "file")]
    family: Option<Family>,

    #[arg(short)]
    m: Option<u64>,

    #[arg(short)]
    n: Option<u64>,

    #[arg(short)]
    p: Option<u64>,

    /// Maximum number of linear extensions to enumerate
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print W(P, t)
    Compute {
        #[command(flatten)]
        source: Source,
        /// Defaults to the closed form for families and enumeration for files
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Certify whether W(P, t) is real-rooted
    Check {
        #[command(flatten)]
        source: Source,
        /// Skip the floating-point approximation of non-real roots
        #[arg(long)]
        no_approx: bool,
    },
    /// Scan (m, n) for non-real-rooted W(P_{m,n})
    Search {
        /// m range as LO:HI or a single value
        #[arg(long = "m-range", default_value = "1:12")]
        m_range: String,
        /// n range as LO:HI or a single value
        #[arg(long = "n-range", default_value = "1:12")]
        n_range: String,
        #[arg(long)]
        only_failures: bool,
        /// Also approximate the non-real roots of each failing cell
        #[arg(long)]
        approx: bool,
        /// Write one JSON object per cell to this file
        #[arg(long)]
        jsonl: Option<PathBuf>,
        /// Report only the minimal counterexamples within [1, HI] x [1, HI]
        #[arg(long, value_enum)]
        minimal: Option<Order>,
    },
    /// Print the Eulerian polynomial A_p(t)
    Eulerian {
        #[arg(short)]
        p: u64,
    },
    /// Convergence of f_{m,n}(t) = W(P_{m,n}, t/mn) towards F(t) - 1
    Asymptotics {
        #[arg(short, default_value_t = 20)]
        m: u64,
        #[arg(short, default_value_t = 20)]
        n: u64,
        /// Half-width of the interval (-a, 0), as an integer or fraction
        #[arg(short, default_value = "4")]
        a: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Truncation degree of F used for zero isolation
        #[arg(long, default_value_t = 30)]
        degree: u64,
        /// Half-width for the |f + 1| < 1 check
        #[arg(long, default_value = "1/4")]
        near_unit: String,
    },
    /// Re-run the fixed reproduction battery
    VerifyPaper {
        /// Skip the two large enumerations
        #[arg(long)]
        quick: bool,
        /// Corrupt one expected coefficient (negative control)
        #[arg(long, hide = true)]
        corrupt: bool,
    },
}

/// Error paired with the process exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        let code = match error.downcast_ref::<CoreError>() {
            Some(CoreError::BudgetExceeded { .. }) => EXIT_BUDGET,
            Some(
                CoreError::Cycle { .. }
                | CoreError::Label { .. }
                | CoreError::EmptyGroundSet
                | CoreError::Parse { .. },
            ) => EXIT_BAD_POSET,
            _ => EXIT_FAILURE,
        };
        Failure { code, error }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs.filter(|&j| j > 0) {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Compute { source, method } => cmd_compute(&mut out, cli.output, source, *method)?,
        Command::Check { source, no_approx } => {
            cmd_check(&mut out, cli.output, source, !no_approx)?
        }
        Command::Search {
            m_range,
            n_range,
            only_failures,
            approx,
            jsonl,
            minimal,
        } => cmd_search(
            &mut out,
            cli.output,
            parse_range(m_range)?,
            parse_range(n_range)?,
            *only_failures,
            *approx,
            jsonl.as_deref(),
            *minimal,
        )?,
        Command::Eulerian { p } => {
            if *p == 0 {
                return Err(anyhow!("p must be positive").into());
            }
            render::polynomial(&mut out, cli.output, &eulerian_polynomial(*p))?;
            0
        }
        Command::Asymptotics {
            m,
            n,
            a,
            samples,
            degree,
            near_unit,
        } => cmd_asymptotics(
            &mut out, cli.output, *m, *n, a, *samples, *degree, near_unit,
        )?,
        Command::VerifyPaper { quick, corrupt } => {
            let ok = verify::run(&mut out, cli.output, *quick, *corrupt)?;
            if ok {
                0
            } else {
                EXIT_FAILURE
            }
        }
    };
    out.flush().map_err(anyhow::Error::from)?;
    Ok(code)
}

/// Family size arguments; a missing or zero size is a bad poset.
fn require(value: Option<u64>, name: &str, family: Family) -> CliResult<u64> {
    let error = match value {
        Some(0) => anyhow!("-{name} must be positive"),
        Some(v) => return Ok(v),
        None => {
            let family = family.to_possible_value().expect("no skipped variants");
            anyhow!("--family {} needs -{name}", family.get_name())
        }
    };
    Err(Failure {
        code: EXIT_BAD_POSET,
        error,
    })
}

fn load_poset(source: &Source) -> CliResult<Poset> {
    if let Some(path) = &source.file {
        let text = fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_BAD_POSET,
            error: anyhow!("cannot read {}: {e}", path.display()),
        })?;
        return text
            .parse::<Poset>()
            .with_context(|| format!("invalid poset file {}", path.display()))
            .map_err(Failure::from);
    }
    let family = source.family.expect("clap enforces family or file");
    let poset = match family {
        Family::Pmn => Poset::pmn(
            require(source.m, "m", family)? as usize,
            require(source.n, "n", family)? as usize,
        ),
        Family::Chains => Poset::disjoint_chains(
            require(source.m, "m", family)? as usize,
            require(source.n, "n", family)? as usize,
        ),
        Family::Antichain => Poset::antichain(require(source.p, "p", family)? as usize),
        Family::Chain => Poset::chain(require(source.p.or(source.m), "p", family)? as usize),
    };
    Ok(poset?)
}

/// Closed form when the source is a family.
fn formula(source: &Source) -> CliResult<Option<IntPolynomial>> {
    let Some(family) = source.family else {
        return Ok(None);
    };
    Ok(Some(match family {
        Family::Pmn => w_pmn(
            require(source.m, "m", family)?,
            require(source.n, "n", family)?,
        ),
        Family::Chains => w_disjoint_chains(
            require(source.m, "m", family)?,
            require(source.n, "n", family)?,
        ),
        Family::Antichain => eulerian_polynomial(require(source.p, "p", family)?),
        Family::Chain => {
            require(source.p.or(source.m), "p", family)?;
            IntPolynomial::constant(BigInt::from(1))
        }
    }))
}

fn enumerate(source: &Source) -> CliResult<IntPolynomial> {
    let poset = load_poset(source)?;
    Ok(w_polynomial_enumerative(&poset, source.budget)?)
}

fn cmd_compute(
    out: &mut impl Write,
    output: Output,
    source: &Source,
    method: Option<Method>,
) -> CliResult<u8> {
    let method = method.unwrap_or(if source.file.is_some() {
        Method::Enumerate
    } else {
        Method::Formula
    });
    let w = match method {
        Method::Enumerate => enumerate(source)?,
        Method::Formula => formula(source)?
            .ok_or_else(|| anyhow!("no closed form for a poset file; use --method enum"))?,
        Method::Both => {
            let closed = formula(source)?
                .ok_or_else(|| anyhow!("no closed form for a poset file; use --method enum"))?;
            let enumerated = enumerate(source)?;
            if closed != enumerated {
                render::polynomial(out, output, &enumerated)?;
                return Err(anyhow!(
                    "enumeration gives {enumerated} but the closed form gives {closed}"
                )
                .into());
            }
            enumerated
        }
    };
    render::polynomial(out, output, &w)?;
    if method == Method::Both && output == Output::Human {
        writeln!(out, "enumeration and closed form agree").map_err(anyhow::Error::from)?;
    }
    Ok(0)
}

fn cmd_check(
    out: &mut impl Write,
    output: Output,
    source: &Source,
    want_approx: bool,
) -> CliResult<u8> {
    let w = match formula(source)? {
        Some(w) => w,
        None => enumerate(source)?,
    };
    if w.is_zero() {
        return Err(anyhow!("W polynomial is zero").into());
    }
    let report = analyze(&w, want_approx)?;
    render::check(out, output, &w, &report)?;
    Ok(if report.is_real_rooted() {
        0
    } else {
        EXIT_NOT_REAL_ROOTED
    })
}

fn parse_range(s: &str) -> CliResult<std::ops::RangeInclusive<u64>> {
    let parse = |t: &str| -> anyhow::Result<u64> {
        t.trim()
            .parse::<u64>()
            .with_context(|| format!("invalid range bound {t:?}"))
    };
    let range = match s.split_once(':') {
        Some((lo, hi)) => parse(lo)?..=parse(hi)?,
        None => {
            let v = parse(s)?;
            v..=v
        }
    };
    Ok(range)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    out: &mut impl Write,
    output: Output,
    m_range: std::ops::RangeInclusive<u64>,
    n_range: std::ops::RangeInclusive<u64>,
    only_failures: bool,
    approx: bool,
    jsonl: Option<&std::path::Path>,
    minimal: Option<Order>,
) -> CliResult<u8> {
    let results = match minimal {
        Some(order) => {
            let order = match order {
                Order::BySum => MinimalOrder::BySum,
                Order::ByDegree => MinimalOrder::ByDegree,
            };
            minimal_counterexamples(*m_range.end(), *n_range.end(), order)?
        }
        None => scan(m_range, n_range, only_failures, approx)?,
    };
    if let Some(path) = jsonl {
        let file =
            fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
        let mut w = BufWriter::new(file);
        for r in &results {
            serde_json::to_writer(&mut w, r).map_err(anyhow::Error::from)?;
            writeln!(w).map_err(anyhow::Error::from)?;
        }
        w.flush().map_err(anyhow::Error::from)?;
    }
    match output {
        Output::Json => {
            for r in &results {
                serde_json::to_writer(&mut *out, r).map_err(anyhow::Error::from)?;
                writeln!(out).map_err(anyhow::Error::from)?;
            }
        }
        Output::Human => render::search_table(out, &results)?,
    }
    Ok(0)
}

fn parse_rational(s: &str) -> CliResult<BigRational> {
    let value: BigRational = s
        .trim()
        .parse()
        .map_err(|_| anyhow!("invalid rational {s:?}"))?;
    if value <= BigRational::from_integer(0.into()) {
        return Err(anyhow!("interval half-width must be positive, got {s}").into());
    }
    Ok(value)
}

/// Width to which zeros of the truncated `F` are refined: `2^-40`.
fn zero_width() -> num_rational::BigRational {
    num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(1u64 << 40))
}

#[allow(clippy::too_many_arguments)]
fn cmd_asymptotics(
    out: &mut impl Write,
    output: Output,
    m: u64,
    n: u64,
    a: &str,
    samples: usize,
    degree: u64,
    near_unit: &str,
) -> CliResult<u8> {
    let a_exact = parse_rational(a)?;
    let near_exact = parse_rational(near_unit)?;
    let a_float = wpoly_core::poly::ratio_to_f64(&a_exact);
    let near_float = wpoly_core::poly::ratio_to_f64(&near_exact);
    let summary = render::AsymptoticsSummary {
        m,
        n,
        a: a_exact.to_string(),
        samples,
        gap: asymptotics::convergence_gap(m, n, a_float, samples)?,
        near_unit_a: near_exact.to_string(),
        near_unit: asymptotics::near_unit_magnitude_check(m, n, near_float)?,
        truncation_degree: degree,
        j0_first_zero: asymptotics::bessel_j0_first_zero(40)?,
        f_zero_intervals: asymptotics::refined_zeros_of_f_truncation(
            degree,
            &a_exact,
            &zero_width(),
        )?
        .into_iter()
        .map(|(lo, hi)| [lo.to_string(), hi.to_string()])
        .collect(),
    };
    render::asymptotics(out, output, &summary)?;
    Ok(0)
}
