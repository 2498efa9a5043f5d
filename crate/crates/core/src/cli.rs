//! The `weyldeg` command line.
//!
//! Machine output is JSON lines (one record per line); `--pretty` switches
//! to plain tables. Exit status: 0 success, 1 verification mismatch or a
//! failed internal invariant, 2 usage error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::dimension::{weyl_dim, DominantWeight};
use crate::error::Error;
use crate::families::family;
use crate::pell::{brute_force_star, star_solutions};
use crate::records::{CorootRecord, GroupRecord, StarRecord, WitnessRecord};
use crate::rootdata::{build_datum, parse_types, Family, LieType, RootDatum};
use crate::search::{enumerate_dominant_with_progress, group_by_degree};
use crate::verify::{verify_prop2, verify_remark159, verify_thm3, Report};

/// Environment variable read by the binary to size the worker pool.
pub const THREADS_ENV: &str = "WEYLDEG_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "weyldeg", version, about = "Degrees of irreducible representations and equal-degree pairs")]
pub struct Cli {
    /// Human-readable tables instead of JSON lines.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree of V(λ), e.g. `dim A2 1,2`.
    Dim {
        /// Type such as `E8` or a product such as `A1+A1`.
        lie_type: String,
        /// Comma-separated coordinates in the fundamental-weight basis.
        coords: String,
    },
    /// Positive coroots in the simple-coroot basis.
    Roots { lie_type: String },
    /// Groups of weights in distinct orbits with equal degree ≤ max-dim.
    Search {
        lie_type: String,
        #[arg(long = "max-dim")]
        max_dim: String,
        /// Do not collapse weights related by diagram automorphisms.
        #[arg(long)]
        raw: bool,
        /// Report enumeration progress on stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Equal-degree witnesses of the classical families.
    Family {
        #[arg(ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        rank: u64,
        /// Number of type C witnesses (ignored for A, B, D).
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Solutions of c² − (4l−5)a² = (2l−3)² with derived b.
    Pell {
        #[arg(long)]
        rank: u64,
        /// First solutions of the scaled Pell family.
        #[arg(long, conflicts_with = "brute_max")]
        count: Option<usize>,
        /// Exhaustive scan over 3 ≤ a ≤ this bound instead.
        #[arg(long = "brute-max")]
        brute_max: Option<u64>,
    },
    /// Recompute a bundle of published results.
    Verify {
        bundle: Bundle,
        /// Include the long E7/E8 minimality scans (prop2 only).
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bundle {
    Prop2,
    Thm3,
    Remark159,
}

/// A command with every argument parsed and validated; nothing has been
/// computed yet.
#[derive(Debug)]
pub enum Plan {
    Dim(Vec<LieType>, DominantWeight),
    Roots(Vec<LieType>),
    Search {
        types: Vec<LieType>,
        max_dim: BigUint,
        raw: bool,
        progress: bool,
    },
    Family(Family, u64, usize),
    PellScaled(u64, usize),
    PellBrute(u64, u64),
    Verify(Bundle, bool),
}

#[derive(Debug)]
pub enum CliError {
    /// Help or version output requested; printed to stdout, exit 0.
    Info(String),
    Usage(String),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Parses and validates arguments (including the program name).
pub fn parse<I, T>(args: I) -> Result<Plan, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError::Info(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    })?;
    plan(cli.command)
}

pub fn plan(command: Command) -> Result<Plan, CliError> {
    Ok(match command {
        Command::Dim { lie_type, coords } => {
            let types = parse_types(&lie_type).map_err(usage)?;
            let w = DominantWeight::parse(&coords).map_err(usage)?;
            let rank: usize = types.iter().map(|t| t.rank()).sum();
            w.check_rank(rank).map_err(usage)?;
            Plan::Dim(types, w)
        }
        Command::Roots { lie_type } => Plan::Roots(parse_types(&lie_type).map_err(usage)?),
        Command::Search {
            lie_type,
            max_dim,
            raw,
            progress,
        } => {
            let types = parse_types(&lie_type).map_err(usage)?;
            let max_dim = match BigUint::parse_bytes(max_dim.as_bytes(), 10) {
                Some(m) if max_dim.bytes().all(|b| b.is_ascii_digit()) && m >= BigUint::from(1u32) => m,
                _ => return Err(usage(format!("--max-dim must be a positive integer, got `{max_dim}`"))),
            };
            Plan::Search {
                types,
                max_dim,
                raw,
                progress,
            }
        }
        Command::Family {
            family,
            rank,
            count,
        } => {
            let min = if family == FamilyArg::D { 4 } else { 3 };
            if rank < min {
                return Err(usage(format!("family {family:?} needs --rank ≥ {min}")));
            }
            if rank as usize > crate::rootdata::MAX_RANK {
                return Err(usage(Error::RankTooLarge {
                    rank: rank as usize,
                    max: crate::rootdata::MAX_RANK,
                }));
            }
            if count == 0 {
                return Err(usage("--count must be ≥ 1"));
            }
            Plan::Family(family.into(), rank, count)
        }
        Command::Pell {
            rank,
            count,
            brute_max,
        } => {
            if rank < 3 || rank > u32::MAX as u64 {
                return Err(usage(format!("--rank must be in 3..=2^32−1, got {rank}")));
            }
            match (count, brute_max) {
                (_, Some(0)) => return Err(usage("--brute-max must be ≥ 1")),
                (_, Some(a)) => Plan::PellBrute(rank, a),
                (Some(0), _) => return Err(usage("--count must be ≥ 1")),
                (c, None) => Plan::PellScaled(rank, c.unwrap_or(1)),
            }
        }
        Command::Verify { bundle, extended } => Plan::Verify(bundle, extended),
    })
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

fn datum(types: &[LieType]) -> Result<RootDatum, Error> {
    build_datum(types)
}

fn write_report(report: &Report, out: &mut dyn Write) -> std::io::Result<i32> {
    for c in &report.checks {
        writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
    }
    let failed = report.failures().count();
    writeln!(out, "{} checks, {} failed", report.checks.len(), failed)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

/// Executes a validated plan.
pub fn execute(plan: Plan, pretty: bool, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    macro_rules! tryc {
        ($e:expr) => {
            match $e {
                Ok(v) => v,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(exit_for(&e));
                }
            }
        };
    }
    match plan {
        Plan::Dim(types, w) => {
            let d = tryc!(datum(&types));
            writeln!(out, "{}", tryc!(weyl_dim(&d, &w)))?;
        }
        Plan::Roots(types) => {
            let d = tryc!(datum(&types));
            for c in d.components() {
                for r in c.coroots() {
                    if pretty {
                        let coords: Vec<String> = r.coords().iter().map(u8::to_string).collect();
                        writeln!(out, "{:<6} {:>3}  {}", c.lie_type().to_string(), r.height(), coords.join(" "))?;
                    } else {
                        writeln!(out, "{}", CorootRecord::new(c.lie_type(), r).to_line())?;
                    }
                }
            }
        }
        Plan::Search {
            types,
            max_dim,
            raw,
            progress,
        } => {
            let d = tryc!(datum(&types));
            let weights = tryc!(enumerate_dominant_with_progress(&d, &max_dim, |a1, n| {
                if progress {
                    eprintln!("a1 = {a1}: {n} weights");
                }
            }));
            let groups = tryc!(group_by_degree(&d, weights, !raw));
            for g in &groups {
                if pretty {
                    let ws: Vec<String> = g.weights.iter().map(|w| format!("({w})")).collect();
                    writeln!(out, "{:>20}  {}", g.degree.to_string(), ws.join("  "))?;
                } else {
                    writeln!(out, "{}", GroupRecord::new(g).to_line())?;
                }
            }
        }
        Plan::Family(f, l, count) => {
            for w in tryc!(family(f, l, count)) {
                if pretty {
                    writeln!(out, "{}  ({})  ({})  {}", w.lie_type, w.lambda, w.mu, w.degree)?;
                } else {
                    writeln!(out, "{}", WitnessRecord::new(&w).to_line())?;
                }
            }
        }
        Plan::PellScaled(l, count) => {
            for s in tryc!(star_solutions(l, count)) {
                if pretty {
                    writeln!(out, "l={} c={} a={} b={}", s.l(), s.c(), s.a(), s.b())?;
                } else {
                    writeln!(out, "{}", StarRecord::new(&s).to_line())?;
                }
            }
        }
        Plan::PellBrute(l, a_max) => {
            for s in tryc!(brute_force_star(l, a_max)) {
                if pretty {
                    writeln!(out, "l={} c={} a={} b={}", s.l(), s.c(), s.a(), s.b())?;
                } else {
                    writeln!(out, "{}", StarRecord::new(&s).to_line())?;
                }
            }
        }
        Plan::Verify(bundle, extended) => {
            let report = match bundle {
                Bundle::Prop2 => verify_prop2(true, extended),
                Bundle::Thm3 => verify_thm3(),
                Bundle::Remark159 => verify_remark159(),
            };
            return write_report(&report, out);
        }
    }
    Ok(EXIT_OK)
}

/// Full command-line run: returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let pretty = args.iter().any(|a| a == "--pretty");
    let result = match parse(args) {
        Ok(plan) => execute(plan, pretty, out, err),
        Err(CliError::Info(text)) => write!(out, "{text}").map(|_| EXIT_OK),
        Err(CliError::Usage(text)) => {
            let text = text.trim_end();
            let text = text.strip_prefix("error: ").unwrap_or(text);
            writeln!(err, "error: {text}").map(|_| EXIT_USAGE)
        }
    };
    result.unwrap_or(EXIT_MISMATCH)
}
