//! The `rbd` command line.
//!
//! Only the answer goes to stdout; diagnostics go to stderr. Exit codes are
//! 0 on success, 1 for a negative domain outcome (unequal diagrams, a law
//! violation), 2 for usage and input errors and 3 when a size limit is hit.

use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::canonical::{enumerate_classes, NodeStore};
use crate::diagram::{Diagram, GeneratingSet, StateAssignment};
use crate::error::Error;
use crate::laws::{check_diagram_algebra, check_reliability_algebra, check_structure_homomorphism, LawReport};
use crate::parser::parse;
use crate::reliability::{
    reliability_bruteforce, reliability_exact, reliability_montecarlo, reliability_polynomial,
    ReliabilityAssignment,
};

/// Largest component count `table` prints.
pub const TABLE_PRINT_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    DomainFailure = 1,
    Usage = 2,
    ResourceLimit = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn of_error(e: &Error) -> ExitStatus {
        if e.is_resource_limit() {
            ExitStatus::ResourceLimit
        } else {
            ExitStatus::Usage
        }
    }
}

const AFTER_HELP: &str = "\
Expressions: components A1, A2, ...; constants 1 and 0; ~ complement; \
* (or &) series; + (or |) parallel; parentheses. * binds tighter than +.

State bit strings and probability files list components in ascending index \
order. Probability files hold one `A<k> = <p>` per line; `#` starts a comment.";

#[derive(Debug, Parser)]
#[command(name = "rbd", version, about = "Reliability block diagram toolkit", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Brute,
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LawTarget {
    Diagrams,
    Reliability,
    Phi,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the structure function under a state such as `101`
    /// (first bit = lowest-indexed component).
    Eval { expr: String, state: String },
    /// Print the truth table, entry k for the state whose bit i is component i.
    Table { expr: String },
    /// Decide equality as Boolean terms; exit 1 if not equal.
    Equal { expr1: String, expr2: String },
    /// Print the canonical form as an adjacency list.
    Canon { expr: String },
    /// Compute the reliability from a probability file (`-` for stdin).
    Rel {
        expr: String,
        probs: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the reliability polynomial.
    Poly { expr: String },
    /// Count the distinct diagrams over n components.
    Enum {
        n: usize,
        /// Also print the truth table of every class.
        #[arg(long)]
        list: bool,
    },
    /// Monte Carlo reliability estimate (same as `rel --method mc`).
    Simulate {
        expr: String,
        probs: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the Boolean-algebra laws; exit 1 on any failure.
    Laws {
        target: LawTarget,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        components: usize,
    },
}

/// A failure with its exit status and message for stderr.
struct Failure(ExitStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(ExitStatus::of_error(&e), e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(ExitStatus::Usage, e.to_string())
    }
}

type Outcome = Result<ExitStatus, Failure>;

/// Formats a probability with 15 significant digits, dropping trailing zeros.
pub fn format_probability(x: f64) -> String {
    let rounded: f64 = format!("{x:.14e}").parse().unwrap_or(x);
    format!("{rounded}")
}

fn parse_expr(text: &str) -> Result<Diagram, Failure> {
    parse(text).map_err(|e| Failure(ExitStatus::Usage, format!("{e} in `{text}`")))
}

fn read_assignment(path: &PathBuf, stdin: &mut dyn Read) -> Result<ReliabilityAssignment, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure(ExitStatus::Usage, format!("{}: {e}", path.display())))?
    };
    Ok(ReliabilityAssignment::parse(&text)?)
}

fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|b| if *b { '1' } else { '0' }).collect()
}

fn print_reports(out: &mut dyn Write, reports: &[LawReport]) -> Outcome {
    for r in reports {
        writeln!(out, "{r}")?;
    }
    Ok(if reports.iter().all(LawReport::passed) {
        ExitStatus::Success
    } else {
        ExitStatus::DomainFailure
    })
}

fn print_montecarlo(
    out: &mut dyn Write,
    d: &Diagram,
    p: &ReliabilityAssignment,
    samples: u64,
    seed: u64,
) -> Outcome {
    let rep = reliability_montecarlo(d, &GeneratingSet::of(d), p, samples, seed)?;
    writeln!(out, "estimate {}", format_probability(rep.estimate))?;
    writeln!(out, "standard_error {}", format_probability(rep.standard_error))?;
    writeln!(out, "samples {}", rep.samples)?;
    writeln!(out, "seed {}", rep.seed)?;
    Ok(ExitStatus::Success)
}

fn execute(command: Command, out: &mut dyn Write, stdin: &mut dyn Read) -> Outcome {
    match command {
        Command::Eval { expr, state } => {
            let d = parse_expr(&expr)?;
            let set = GeneratingSet::of(&d);
            let bits = state
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Failure(ExitStatus::Usage, format!("bad state bit `{c}`"))),
                })
                .collect::<Result<Vec<bool>, Failure>>()?;
            let s = StateAssignment::from_bits(&set, &bits)?;
            writeln!(out, "{}", u8::from(d.evaluate(&s)?))?;
            Ok(ExitStatus::Success)
        }
        Command::Table { expr } => {
            let d = parse_expr(&expr)?;
            let table = d.truth_table_capped(&GeneratingSet::of(&d), TABLE_PRINT_CAP)?;
            writeln!(out, "{}", bits_to_string(&table))?;
            Ok(ExitStatus::Success)
        }
        Command::Equal { expr1, expr2 } => {
            let (d1, d2) = (parse_expr(&expr1)?, parse_expr(&expr2)?);
            let set = GeneratingSet::union([&d1, &d2]);
            let mut store = NodeStore::new(set);
            let (a, b) = (store.canonicalize(&d1)?, store.canonicalize(&d2)?);
            if a == b {
                writeln!(out, "EQUAL")?;
                return Ok(ExitStatus::Success);
            }
            let (na, nb) = (store.complement(a)?, store.complement(b)?);
            let (x, y) = (store.meet(a, nb)?, store.meet(na, b)?);
            let diff = store.join(x, y)?;
            let witness = store
                .satisfying_state(diff)?
                .expect("unequal forms differ somewhere");
            writeln!(out, "NOT EQUAL witness={}", witness.to_bit_string())?;
            Ok(ExitStatus::DomainFailure)
        }
        Command::Canon { expr } => {
            let d = parse_expr(&expr)?;
            let mut store = NodeStore::new(GeneratingSet::of(&d));
            let c = store.canonicalize(&d)?;
            write!(out, "{}", store.export(c)?)?;
            Ok(ExitStatus::Success)
        }
        Command::Rel {
            expr,
            probs,
            method,
            samples,
            seed,
        } => {
            let d = parse_expr(&expr)?;
            let p = read_assignment(&probs, stdin)?;
            let set = GeneratingSet::of(&d);
            let r = match method {
                Method::Exact => reliability_exact(&d, &set, &p)?,
                Method::Brute => reliability_bruteforce(&d, &set, &p)?,
                Method::Mc => return print_montecarlo(out, &d, &p, samples, seed),
            };
            writeln!(out, "{}", format_probability(r))?;
            Ok(ExitStatus::Success)
        }
        Command::Simulate {
            expr,
            probs,
            samples,
            seed,
        } => {
            let d = parse_expr(&expr)?;
            let p = read_assignment(&probs, stdin)?;
            print_montecarlo(out, &d, &p, samples, seed)
        }
        Command::Poly { expr } => {
            let d = parse_expr(&expr)?;
            writeln!(out, "{}", reliability_polynomial(&d, &GeneratingSet::of(&d))?)?;
            Ok(ExitStatus::Success)
        }
        Command::Enum { n, list } => {
            let classes = enumerate_classes(n, list)?;
            writeln!(out, "{}", classes.count)?;
            for table in classes.tables.iter().flatten() {
                writeln!(out, "{}", bits_to_string(table))?;
            }
            Ok(ExitStatus::Success)
        }
        Command::Laws {
            target,
            trials,
            seed,
            components,
        } => match target {
            LawTarget::Diagrams => print_reports(out, &check_diagram_algebra(trials, seed, components)?),
            LawTarget::Reliability => {
                print_reports(out, &check_reliability_algebra(trials, seed, components)?)
            }
            LawTarget::Phi => {
                print_reports(out, &[check_structure_homomorphism(trials, seed, components)?])
            }
        },
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, stdin: &mut dyn Read) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                ExitStatus::Usage
            } else {
                ExitStatus::Success
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return status;
        }
    };
    match execute(cli.command, out, stdin) {
        Ok(status) => status,
        Err(Failure(status, message)) => {
            let _ = writeln!(err, "error: {message}");
            status
        }
    }
}
