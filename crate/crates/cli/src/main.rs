//! Command-line frontend: statistics, enumeration, histograms, bijection
//! traces, class matrices, exhaustive verification, and sampling.
//!
//! Exit codes are the machine-readable failure channel: 0 success, 2 parse
//! or usage failure, 3 precondition or invariant violation, 4 failed
//! verification checks, 5 enumeration cap exceeded. Stdout carries only the
//! requested artifact; diagnostics go to stderr.

mod verify;

use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use chung_feller::bijections::{orbit, LevelMap};
use chung_feller::enumeration::{
    enumerate_paths, enumerate_pointed, enumerate_step_set_paths, histogram, path_space_size,
    pointed_space_size, step_set_histogram, uniform_sample, EnumerationError, PointedStatistic,
    Statistic, StepSet, DEFAULT_ENUM_CAP,
};
use chung_feller::pointed::{gamma, gamma_sequence, theta, theta_sequence};
use chung_feller::{BigUint, LatticePath, PathError, PathParseError, PointedLatticePath};
use verify::{run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "chung-feller",
    version,
    about = "Lattice-path statistics, level-shifting bijections, exact enumeration, and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a statistic of a path literal.
    Stat(StatArgs),
    /// Stream every path of the space as JSON lines.
    Enumerate(EnumerateArgs),
    /// Exact histogram of a statistic over a full or restricted space.
    Histogram(HistogramArgs),
    /// Apply a level-shifting map once, or trace its whole orbit.
    Biject(BijectArgs),
    /// Emit the theta matrix of a path's pointed class.
    Theta(MatrixArgs),
    /// Emit the gamma matrix of a path's pointed class.
    Gamma(MatrixArgs),
    /// Run exhaustive checks over a parameter grid.
    Verify(VerifyArgs),
    /// Draw a uniform pointed path with a prescribed statistic value.
    Sample(SampleArgs),
}

#[derive(Args)]
struct StatArgs {
    /// Path literal, e.g. "(1,1)(1,-2)(1,1)(2,1)".
    #[arg(long)]
    path: String,
    /// One of npl, rml, pnpl, prml.
    #[arg(long)]
    stat: String,
    /// Root offset; required by the pointed statistics.
    #[arg(long)]
    root_offset: Option<i64>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: i64,
    /// Emit pointed paths (every legal root offset) instead of plain paths.
    #[arg(long)]
    pointed: bool,
    /// Restrict to a step alphabet: dyck, schroeder, motzkin, or a JSON
    /// list like "[[1,1],[1,-1],[2,0]]".
    #[arg(long)]
    step_set: Option<String>,
}

#[derive(Args)]
struct HistogramArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: i64,
    /// One of npl, rml, pnpl, prml.
    #[arg(long)]
    statistic: String,
    /// Restrict to a step alphabet (see `enumerate`).
    #[arg(long)]
    step_set: Option<String>,
    /// Output format: json or csv.
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct BijectArgs {
    /// One of phi, phi_inv, phi_zero, phi_zero_inv, psi, psi_inv,
    /// psi_zero, psi_zero_inv.
    #[arg(long)]
    map: String,
    /// Path literal the map is applied to.
    #[arg(long)]
    path: String,
    /// Repeat until the precondition fails, emitting the whole chain
    /// (starting path included) as JSON lines.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct MatrixArgs {
    /// Path literal whose pointed class is laid out.
    #[arg(long)]
    path: String,
    /// Emit only the class member of this rank in [1, m] instead of the
    /// whole matrix.
    #[arg(long)]
    r: Option<i64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Order parameters, a single value "2" or an inclusive range "1..4".
    #[arg(long)]
    n: String,
    /// Lengths, as a value or range; mutually exclusive with --m-offset.
    #[arg(long, conflicts_with = "m_offset")]
    m: Option<String>,
    /// Length offsets: m ranges over n+1+a ..= n+1+b per n.
    #[arg(long)]
    m_offset: Option<String>,
    /// One of all, npl, rml, pointed, stepsets.
    #[arg(long, default_value = "all")]
    suite: String,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: i64,
    /// One of pnpl, prml.
    #[arg(long)]
    statistic: String,
    /// The statistic value the sample is conditioned on, in [0, m-1].
    #[arg(long)]
    r: i64,
    /// RNG seed; identical seeds reproduce identical output.
    #[arg(long)]
    seed: u64,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse(String),
    Precondition(String),
    ChecksFailed(usize),
    Inconsistent(String),
    CapExceeded(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::ChecksFailed(_) | CliError::Inconsistent(_) => 4,
            CliError::CapExceeded(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Parse(msg) => f.write_str(msg),
            CliError::Precondition(msg) => f.write_str(msg),
            CliError::ChecksFailed(failed) => write!(f, "{failed} verification check(s) failed"),
            CliError::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
            CliError::CapExceeded(msg) => f.write_str(msg),
        }
    }
}

impl From<PathParseError> for CliError {
    fn from(err: PathParseError) -> Self {
        match err {
            PathParseError::Syntax { .. } => CliError::Parse(err.to_string()),
            PathParseError::Invalid(inner) => CliError::Precondition(inner.to_string()),
        }
    }
}

impl From<PathError> for CliError {
    fn from(err: PathError) -> Self {
        CliError::Precondition(err.to_string())
    }
}

impl From<EnumerationError> for CliError {
    fn from(err: EnumerationError) -> Self {
        match err {
            EnumerationError::InvalidRange { .. } => CliError::Precondition(err.to_string()),
            EnumerationError::NonDivisible { .. } => CliError::Inconsistent(err.to_string()),
            EnumerationError::CapExceeded { .. } => CliError::CapExceeded(err.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Stat(args) => cmd_stat(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Histogram(args) => cmd_histogram(args),
        Command::Biject(args) => cmd_biject(args),
        Command::Theta(args) => cmd_matrix(args, MatrixKind::Theta),
        Command::Gamma(args) => cmd_matrix(args, MatrixKind::Gamma),
        Command::Verify(args) => cmd_verify(args),
        Command::Sample(args) => cmd_sample(args),
    }
}

/// The enumeration cap: CF_ENUM_CAP overrides the default.
fn enumeration_cap() -> Result<u64, CliError> {
    match std::env::var("CF_ENUM_CAP") {
        Ok(value) => value.parse::<u64>().map_err(|_| {
            CliError::Usage(format!(
                "CF_ENUM_CAP must be an unsigned integer, got '{value}'"
            ))
        }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn parse_path(literal: &str) -> Result<LatticePath, CliError> {
    literal.parse::<LatticePath>().map_err(Into::into)
}

fn parse_step_set(spec: &str) -> Result<StepSet, CliError> {
    match spec {
        "dyck" => Ok(StepSet::dyck()),
        "schroeder" => Ok(StepSet::schroeder()),
        "motzkin" => Ok(StepSet::motzkin()),
        other => {
            let pairs: Vec<(i64, i64)> = serde_json::from_str(other).map_err(|_| {
                CliError::Parse(format!(
                    "step set must be dyck, schroeder, motzkin, or a JSON list of [x,y] pairs; got '{other}'"
                ))
            })?;
            StepSet::explicit(pairs).map_err(Into::into)
        }
    }
}

fn parse_usage<T: FromStr<Err = String>>(value: &str) -> Result<T, CliError> {
    value.parse::<T>().map_err(CliError::Usage)
}

/// Inclusive range literal: "a..b" or a single "a".
fn parse_range(value: &str) -> Result<(i64, i64), CliError> {
    let invalid = || CliError::Usage(format!("range '{value}' must be 'a' or 'a..b'"));
    if let Some((lo, hi)) = value.split_once("..") {
        let lo = lo.trim().parse::<i64>().map_err(|_| invalid())?;
        let hi = hi.trim().parse::<i64>().map_err(|_| invalid())?;
        if lo > hi {
            return Err(invalid());
        }
        Ok((lo, hi))
    } else {
        let single = value.trim().parse::<i64>().map_err(|_| invalid())?;
        Ok((single, single))
    }
}

fn emit(value: &serde_json::Value) {
    println!("{value}");
}

fn path_json(p: &LatticePath) -> serde_json::Value {
    serde_json::to_value(p).expect("paths serialize infallibly")
}

fn pointed_json(q: &PointedLatticePath) -> serde_json::Value {
    serde_json::to_value(q).expect("pointed paths serialize infallibly")
}

fn cmd_stat(args: StatArgs) -> Result<(), CliError> {
    let statistic: Statistic = parse_usage(&args.stat)?;
    let path = parse_path(&args.path)?;
    let value = if statistic.is_pointed() {
        let offset = args.root_offset.ok_or_else(|| {
            CliError::Usage(format!("--root-offset is required for {}", args.stat))
        })?;
        let pointed = PointedLatticePath::new(path, offset)?;
        match statistic {
            Statistic::Pnpl => pointed.pnpl(),
            Statistic::Prml => pointed.prml(),
            _ => unreachable!(),
        }
    } else {
        if args.root_offset.is_some() {
            return Err(CliError::Usage(format!(
                "--root-offset only applies to pointed statistics, not {}",
                args.stat
            )));
        }
        match statistic {
            Statistic::Npl => path.npl(),
            Statistic::Rml => path.rml(),
            _ => unreachable!(),
        }
    };
    println!("{value}");
    Ok(())
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let cap = enumeration_cap()?;
    match args.step_set.as_deref() {
        None => {
            let size = if args.pointed {
                pointed_space_size(args.n, args.m)?
            } else {
                path_space_size(args.n, args.m)?
            };
            if size > BigUint::from(cap) {
                return Err(EnumerationError::CapExceeded { size, cap }.into());
            }
            if args.pointed {
                for q in enumerate_pointed(args.n, args.m)? {
                    emit(&pointed_json(&q));
                }
            } else {
                for p in enumerate_paths(args.n, args.m)? {
                    emit(&path_json(&p));
                }
            }
        }
        Some(spec) => {
            let set = parse_step_set(spec)?;
            // No cheap size formula: count first so the cap refusal
            // happens before any output.
            let mut size: u64 = 0;
            for p in enumerate_step_set_paths(&set, args.n, args.m)? {
                size += if args.pointed {
                    p.last_step().x as u64
                } else {
                    1
                };
                if size > cap {
                    return Err(EnumerationError::CapExceeded {
                        size: BigUint::from(size),
                        cap,
                    }
                    .into());
                }
            }
            for p in enumerate_step_set_paths(&set, args.n, args.m)? {
                if args.pointed {
                    for offset in 0..p.last_step().x {
                        let q = PointedLatticePath::new(p.clone(), offset)
                            .expect("offset below the final step length");
                        emit(&pointed_json(&q));
                    }
                } else {
                    emit(&path_json(&p));
                }
            }
        }
    }
    Ok(())
}

fn cmd_histogram(args: HistogramArgs) -> Result<(), CliError> {
    let cap = enumeration_cap()?;
    let statistic: Statistic = parse_usage(&args.statistic)?;
    let step_set = args.step_set.as_deref().map(parse_step_set).transpose()?;
    let distribution = match &step_set {
        None => histogram(args.n, args.m, statistic, cap)?,
        Some(set) => step_set_histogram(set, args.n, args.m, statistic, cap)?,
    };
    match args.format.as_str() {
        "json" => {
            let counts: serde_json::Map<String, serde_json::Value> = distribution
                .counts()
                .iter()
                .map(|(value, count)| (value.to_string(), json!(count.to_string())))
                .collect();
            let mut object = json!({
                "n": args.n,
                "m": args.m,
                "statistic": statistic.name(),
                "counts": counts,
                "total": distribution.total().to_string(),
            });
            if let Some(set) = &step_set {
                let steps: Vec<(i64, i64)> = set.steps().map(|s| (s.x, s.y)).collect();
                object["step_set"] = json!(steps);
            }
            emit(&object);
        }
        "csv" => {
            println!("r,count");
            for (value, count) in distribution.counts() {
                println!("{value},{count}");
            }
        }
        other => return Err(CliError::Usage(format!("unknown format '{other}'"))),
    }
    Ok(())
}

fn cmd_biject(args: BijectArgs) -> Result<(), CliError> {
    let map: LevelMap = parse_usage(&args.map)?;
    let path = parse_path(&args.path)?;
    if args.trace {
        for p in orbit(map, &path) {
            emit(&path_json(&p));
        }
    } else {
        let image = map
            .apply(&path)
            .map_err(|err| CliError::Precondition(err.to_string()))?;
        emit(&path_json(&image));
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum MatrixKind {
    Theta,
    Gamma,
}

fn cmd_matrix(args: MatrixArgs, kind: MatrixKind) -> Result<(), CliError> {
    let path = parse_path(&args.path)?;
    let m = path.m();
    if let Some(r) = args.r {
        let member = match kind {
            MatrixKind::Theta => theta(&path, r)?,
            MatrixKind::Gamma => gamma(&path, r)?,
        };
        emit(&pointed_json(&member));
        return Ok(());
    }
    let cap = enumeration_cap()?;
    if BigUint::from(m as u64) > BigUint::from(cap) {
        return Err(EnumerationError::CapExceeded {
            size: BigUint::from(m as u64),
            cap,
        }
        .into());
    }
    let members = match kind {
        MatrixKind::Theta => theta_sequence(&path),
        MatrixKind::Gamma => gamma_sequence(&path),
    };
    let order: Vec<(usize, i64)> = members
        .iter()
        .map(|c| (c.rotation_index(), c.offset()))
        .collect();
    let paths: Vec<serde_json::Value> =
        members.iter().map(|c| pointed_json(c.realized())).collect();
    let stat: Vec<i64> = (0..m).collect();
    emit(&json!({"order": order, "paths": paths, "stat": stat}));
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let cap = enumeration_cap()?;
    let suite: Suite = parse_usage(&args.suite)?;
    let (n_lo, n_hi) = parse_range(&args.n)?;
    if n_lo < 1 {
        return Err(CliError::Usage("--n values must be at least 1".to_string()));
    }

    let mut cells: Vec<(usize, i64)> = Vec::new();
    match (&args.m, &args.m_offset) {
        (Some(m_spec), None) => {
            let (m_lo, m_hi) = parse_range(m_spec)?;
            for n in n_lo..=n_hi {
                for m in m_lo..=m_hi {
                    cells.push((n as usize, m));
                }
            }
        }
        (None, Some(offset_spec)) => {
            let (off_lo, off_hi) = parse_range(offset_spec)?;
            if off_lo < 0 {
                return Err(CliError::Usage(
                    "--m-offset values must be non-negative".to_string(),
                ));
            }
            for n in n_lo..=n_hi {
                for offset in off_lo..=off_hi {
                    cells.push((n as usize, n + 1 + offset));
                }
            }
        }
        (None, None) => {
            return Err(CliError::Usage(
                "one of --m or --m-offset is required".to_string(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects conflicting flags"),
    }

    let report = run_suite(&cells, suite, cap)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("reports serialize infallibly")
    );
    if report.summary.failed > 0 {
        return Err(CliError::ChecksFailed(report.summary.failed));
    }
    Ok(())
}

fn cmd_sample(args: SampleArgs) -> Result<(), CliError> {
    let statistic: PointedStatistic = parse_usage(&args.statistic)?;
    let sample = uniform_sample(args.n, args.m, statistic, args.r, args.seed)?;
    emit(&pointed_json(&sample));
    Ok(())
}
