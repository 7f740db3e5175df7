//! Command-line front end. The `sfq` binary is a thin wrapper over [`main`].

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cache::{self, Cache, Kind};
use crate::error::{Error, Result};
use crate::hall_littlewood::{hl_h, hl_q};
use crate::macdonald::{check_polynomiality, j_from_h, rodriguez_h, rodriguez_htilde};
use crate::partitions::Partition;
use crate::ring::PolyQT;
use crate::symfun::{Basis, SymFun};
use crate::verify::{self, Config, Suite};

#[derive(Parser, Debug)]
#[command(name = "sfq", version, about = "Exact Macdonald polynomials and q,t-Kostka tables")]
pub struct Cli {
    /// Ignore the on-disk matrix cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand one symmetric function in a chosen basis.
    Expand {
        #[arg(value_enum)]
        family: Family,
        /// Partition such as `3,2,1`; `-` is the empty partition.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, default_value = "s", value_parser = parse_basis)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = ExpandFormat::Text)]
        format: ExpandFormat,
    },
    /// Print a transition matrix for all partitions of `n`.
    Kostka {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        vars: u64,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Inspect or clear the matrix cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    #[value(name = "macdonald-H")]
    MacdonaldH,
    #[value(name = "macdonald-Htilde")]
    MacdonaldHtilde,
    #[value(name = "integral-J")]
    IntegralJ,
    #[value(name = "hl-Q")]
    HlQ,
    #[value(name = "hl-H")]
    HlH,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableKind {
    Qt,
    QtTilde,
    Foulkes,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExpandFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CacheAction {
    Path,
    List,
    Clear,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_basis(s: &str) -> std::result::Result<Basis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// The expansion of `family` at `mu`, in the Schur basis.
pub fn family_schur(family: Family, mu: &Partition) -> Result<SymFun<PolyQT>> {
    match family {
        Family::MacdonaldH => rodriguez_h(mu),
        Family::MacdonaldHtilde => rodriguez_htilde(mu),
        Family::IntegralJ => j_from_h(mu),
        Family::HlQ => hl_q(mu, mu.size()),
        Family::HlH => hl_h(mu),
    }
}

/// Text rendering of an expansion. Power sums need rational coefficients.
pub fn expand_text(family: Family, mu: &Partition, basis: Basis) -> Result<String> {
    let f = family_schur(family, mu)?;
    Ok(match basis {
        Basis::P => f.to_rat().convert(basis)?.to_string(),
        _ => f.convert(basis)?.to_string(),
    })
}

/// JSON rendering of an expansion; parses back as `SymFun<RatQT>`.
pub fn expand_json(family: Family, mu: &Partition, basis: Basis) -> Result<String> {
    let f = family_schur(family, mu)?;
    Ok(match basis {
        Basis::P => serde_json::to_string(&f.to_rat().convert(basis)?)?,
        _ => serde_json::to_string(&f.convert(basis)?)?,
    })
}

/// Exit status of a finished command.
pub enum Outcome {
    Ok(String),
    /// A verification or structural check failed; the text still goes to stdout.
    Failed(String),
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let cache = (!cli.no_cache).then(Cache::from_env);
    match &cli.command {
        Command::Expand { family, mu, basis, format } => Ok(Outcome::Ok(match format {
            ExpandFormat::Text => expand_text(*family, mu, *basis)?,
            ExpandFormat::Json => expand_json(*family, mu, *basis)?,
        })),
        Command::Kostka { kind, n, format } => {
            let kind = match kind {
                TableKind::Qt => Kind::QtKostka,
                TableKind::QtTilde => Kind::QtKostkaTilde,
                TableKind::Foulkes => Kind::KostkaFoulkes,
            };
            let m = match cache::matrix(cache.as_ref(), kind, *n) {
                Err(e @ Error::PolynomialityViolation { .. }) => return Ok(Outcome::Failed(e.to_string())),
                r => r?,
            };
            if let Err(e) = check_polynomiality(&m) {
                return Ok(Outcome::Failed(e.to_string()));
            }
            let text = match format {
                TableFormat::Text => m.to_string().trim_end().to_string(),
                TableFormat::Json => m.to_json(),
                TableFormat::Csv => m.to_csv().trim_end().to_string(),
            };
            Ok(Outcome::Ok(text))
        }
        Command::Verify { suite, max_n, vars, jobs } => {
            let cfg = Config { max_n: *max_n, vars: *vars as usize, jobs: *jobs, cache };
            let report = verify::run(suite.parse()?, &cfg)?;
            let text = report.to_json();
            Ok(if report.passed() { Outcome::Ok(text) } else { Outcome::Failed(text) })
        }
        Command::Cache { action } => {
            let c = Cache::from_env();
            Ok(Outcome::Ok(match action {
                CacheAction::Path => c.dir().display().to_string(),
                CacheAction::List => {
                    c.entries()?.iter().map(|p| p.display().to_string()).collect::<Vec<_>>().join("\n")
                }
                CacheAction::Clear => format!("removed {} files", c.clear()?),
            }))
        }
    }
}

/// Parses `args` (including the program name), runs, and returns the exit
/// code: 0 on success, 1 when a check fails, 2 on a usage error.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(Outcome::Ok(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Outcome::Failed(text)) => {
            let _ = writeln!(out, "{text}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse { .. } | Error::Unknown { .. } | Error::LengthExceedsK { .. } => 2,
                _ => 1,
            }
        }
    }
}

pub fn main() -> i32 {
    main_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
