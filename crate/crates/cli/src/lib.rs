//! Command-line front end for `nilmult-core`.
//!
//! Exit status: 0 success or pass, 1 verification failure, 2 hypothesis or
//! usage violation, 3 resource cap exceeded.

pub mod document;
pub mod render;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use thiserror::Error;

use nilmult_core::{
    build_yzw, chi, check_hall_independence, check_lemma_2_2, check_lemma_2_3, check_lemma_2_4,
    check_lemma_2_5, check_theorem_2_6, enumerate_hall_basis_capped, nilpotent_multiplier_rank,
    polynilpotent_c1_rank, RankReport, Status, Target, VerificationReport, DEFAULT_MAX_ELEMENTS,
};

use crate::document::{BasisEntry, OutputDocument, Payload, RankCell, RankDoc, ReportDoc, TableRow};
pub use crate::render::{render, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nilmult", version, about = "Ranks and bases of nilpotent and polynilpotent multipliers of free nilpotent groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Cap on the number of basic commutators any command may enumerate.
    #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS, global = true)]
    pub max_elements: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MultiplierKind {
    Nilpotent,
    Polynilpotent,
}

impl MultiplierKind {
    fn as_str(self) -> &'static str {
        match self {
            MultiplierKind::Nilpotent => "nilpotent",
            MultiplierKind::Polynilpotent => "polynilpotent",
        }
    }

    fn rank(self, n: u32, c: u32, m: u32) -> nilmult_core::Result<RankReport> {
        match self {
            MultiplierKind::Nilpotent => nilpotent_multiplier_rank(n, c, m),
            MultiplierKind::Polynilpotent => polynilpotent_c1_rank(n, c, m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    #[value(name = "lemma2.2")]
    Lemma22,
    #[value(name = "lemma2.3")]
    Lemma23,
    #[value(name = "lemma2.4")]
    Lemma24,
    #[value(name = "lemma2.5")]
    Lemma25,
    #[value(name = "thm2.6")]
    Thm26,
    Hall,
}

impl VerifyTarget {
    fn target(self) -> Target {
        match self {
            VerifyTarget::Lemma22 => Target::Lemma22,
            VerifyTarget::Lemma23 => Target::Lemma23,
            VerifyTarget::Lemma24 => Target::Lemma24,
            VerifyTarget::Lemma25 => Target::Lemma25,
            VerifyTarget::Thm26 => Target::Thm26,
            VerifyTarget::Hall => Target::Hall,
        }
    }
}

/// Inclusive range written `lo..hi` or a single value; `lo > hi` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u32>);

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                Ok(Span(parse(lo)?..=parse(hi)?))
            }
            None => {
                let v = parse(s)?;
                Ok(Span(v..=v))
            }
        }
    }
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.0.start(), self.0.end())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of basic commutators of a given weight.
    Chi {
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        generators: u64,
    },
    /// List the basic commutators up to a weight, in Hall order.
    Basis {
        #[arg(long)]
        generators: u32,
        #[arg(long)]
        max_weight: u32,
    },
    /// Rank of the c-nilpotent or (c,1)-polynilpotent multiplier.
    Rank {
        #[arg(value_enum)]
        kind: MultiplierKind,
        #[arg(long = "n")]
        n: u32,
        #[arg(long = "c")]
        c: u32,
        #[arg(long = "m")]
        m: u32,
    },
    /// Machine-check one of the structural statements.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long = "n")]
        n: u32,
        #[arg(long = "c")]
        c: u32,
        #[arg(long = "m")]
        m: u32,
        #[arg(long, default_value_t = 25)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rank table over ranges of n, c and m (`lo..hi` or a single value).
    Table {
        #[arg(value_enum)]
        kind: MultiplierKind,
        #[arg(long = "n")]
        n: Span,
        #[arg(long = "c")]
        c: Span,
        #[arg(long = "m")]
        m: Span,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] nilmult_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                nilmult_core::Error::ResourceLimit { .. } => EXIT_RESOURCE,
                nilmult_core::Error::Domain(_)
                | nilmult_core::Error::InvalidArgument(_)
                | nilmult_core::Error::TruncationTooSmall { .. } => EXIT_VIOLATION,
                _ => EXIT_FAILURE,
            },
        }
    }
}

/// Result of running one command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn check_basis_budget(m: u32, max_weight: u32, cap: usize) -> Result<(), CliError> {
    let mut total = BigUint::from(0u32);
    for w in 1..=max_weight {
        total += chi(w, m)?;
    }
    if total > BigUint::from(cap) {
        return Err(nilmult_core::Error::ResourceLimit { requested: total.to_string(), cap }.into());
    }
    Ok(())
}

fn verify(
    target: VerifyTarget,
    (n, c, m): (u32, u32, u32),
    trials: u32,
    seed: u64,
    cap: usize,
) -> Result<VerificationReport, CliError> {
    // Largest weight each check enumerates on m letters.
    let needed = match target {
        VerifyTarget::Hall => c + n,
        VerifyTarget::Lemma22 | VerifyTarget::Lemma24 => c + 2 * n,
        _ => 2 * c + 2 * n + 1,
    };
    check_basis_budget(m, needed, cap)?;
    let report = match target {
        VerifyTarget::Lemma22 => check_lemma_2_2(&build_yzw(n, c, m)?),
        VerifyTarget::Lemma24 => check_lemma_2_4(&build_yzw(n, c, m)?),
        VerifyTarget::Lemma23 => check_lemma_2_3(n, c, m, trials, seed)?,
        VerifyTarget::Lemma25 => check_lemma_2_5(n, c, m, trials, seed)?,
        VerifyTarget::Thm26 => check_theorem_2_6(n, c, m)?,
        VerifyTarget::Hall => check_hall_independence(n, c, m)?,
    };
    debug_assert_eq!(report.target, target.target());
    Ok(report)
}

/// Runs a parsed command and returns the document plus the exit status it implies.
pub fn execute(cli: &Cli) -> Result<(OutputDocument, i32), CliError> {
    let cap = cli.max_elements;
    match &cli.command {
        Command::Chi { weight, generators } => {
            let value = chi(*weight, *generators)?;
            let doc = OutputDocument::new(
                "chi",
                params([("weight", weight.to_string()), ("generators", generators.to_string())]),
                Payload::Chi { weight: *weight, generators: *generators, value: value.into() },
            );
            Ok((doc, EXIT_OK))
        }
        Command::Basis { generators, max_weight } => {
            let basis = enumerate_hall_basis_capped(*generators, *max_weight, cap)?;
            let entries = basis
                .elements()
                .iter()
                .enumerate()
                .map(|(i, c)| BasisEntry::new(i, c))
                .collect();
            let doc = OutputDocument::new(
                "basis",
                params([
                    ("generators", generators.to_string()),
                    ("max_weight", max_weight.to_string()),
                ]),
                Payload::Basis { generators: *generators, max_weight: *max_weight, entries },
            );
            Ok((doc, EXIT_OK))
        }
        Command::Rank { kind, n, c, m } => {
            let report = kind.rank(*n, *c, *m)?;
            let doc = OutputDocument::new(
                "rank",
                params([
                    ("kind", kind.as_str().to_string()),
                    ("n", n.to_string()),
                    ("c", c.to_string()),
                    ("m", m.to_string()),
                ]),
                Payload::Rank(RankDoc::new(kind.as_str(), &report)),
            );
            Ok((doc, EXIT_OK))
        }
        Command::Verify { target, n, c, m, trials, seed } => {
            let report = verify(*target, (*n, *c, *m), *trials, *seed, cap)?;
            let code = match report.status {
                Status::Pass => EXIT_OK,
                Status::Fail => EXIT_FAILURE,
                Status::HypothesisViolation => EXIT_VIOLATION,
            };
            let doc = OutputDocument::new(
                "verify",
                params([
                    ("target", target.target().to_string()),
                    ("n", n.to_string()),
                    ("c", c.to_string()),
                    ("m", m.to_string()),
                    ("trials", trials.to_string()),
                    ("seed", seed.to_string()),
                ]),
                Payload::Verification { reports: vec![ReportDoc::from(&report)] },
            );
            Ok((doc, code))
        }
        Command::Table { kind, n, c, m } => {
            let mut rows = Vec::new();
            for nv in n.0.clone() {
                for cv in c.0.clone() {
                    for mv in m.0.clone() {
                        let (rank, note) = match kind.rank(nv, cv, mv) {
                            Ok(r) => (RankCell::Value(r.rank.into()), None),
                            Err(e) => (RankCell::NotApplicable, Some(e.to_string())),
                        };
                        rows.push(TableRow { n: nv, c: cv, m: mv, rank, note });
                    }
                }
            }
            let doc = OutputDocument::new(
                "table",
                params([
                    ("kind", kind.as_str().to_string()),
                    ("n", n.to_string()),
                    ("c", c.to_string()),
                    ("m", m.to_string()),
                ]),
                Payload::Table { multiplier: kind.as_str().to_string(), rows },
            );
            Ok((doc, EXIT_OK))
        }
    }
}

/// Parses `args` (program name first), runs the command and renders its output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VIOLATION } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { stdout, stderr, code };
        }
    };
    match execute(&cli) {
        Ok((doc, code)) => Outcome {
            stdout: render(&doc, cli.format),
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}
