//! The `tracewitt` command line.
//!
//! [`run`] does all the work and returns what would be printed, so tests can
//! drive the CLI in-process; `main` only forwards the result to the process.

use std::io::Read;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tracewitt::format::{
    character_table_from_json, integers_to_json, matrix_from_json, matrix_to_json,
    rationals_to_json,
};
use tracewitt::{
    char_poly_coeffs, check_character, check_exterior_congruence, check_matrix_congruences,
    check_trace_sequence, check_trace_sequence_with_witness, ghost_from_witt, synthesize_with,
    trace_sequence, witt_from_ghost, CongruenceReport, Error, IntMatrix, KPolicy,
    SynthesisOptions, TraceSequence, WittVector,
};

pub mod fuzz;
mod render;

/// All checks passed.
pub const EXIT_OK: i32 = 0;
/// A congruence failed; the report says which.
pub const EXIT_FAIL: i32 = 1;
/// Bad flags or unreadable input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tracewitt",
    version,
    about = "Decide, synthesize and convert integer trace sequences"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomized subcommands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Leave the timestamp out of JSON output.
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A comma-separated list, given with a flag or positionally; `-` reads it
/// from stdin.
#[derive(Debug, Args)]
pub struct ListInput {
    #[arg(long = "traces", value_name = "LIST", allow_hyphen_values = true)]
    flag: Option<String>,

    #[arg(value_name = "LIST", allow_hyphen_values = true, conflicts_with = "flag")]
    positional: Option<String>,
}

#[derive(Debug, Args)]
pub struct WittInput {
    #[arg(long = "witt", value_name = "LIST", allow_hyphen_values = true)]
    flag: Option<String>,

    #[arg(value_name = "LIST", allow_hyphen_values = true, conflicts_with = "flag")]
    positional: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a sequence is the trace sequence of an integer matrix.
    CheckTraces {
        #[command(flatten)]
        input: ListInput,
        /// Attach the Witt coordinates to the report.
        #[arg(long)]
        witness: bool,
    },
    /// Print a companion matrix realizing the given traces.
    Synthesize {
        #[command(flatten)]
        input: ListInput,
        /// Skip recomputing the traces of the result.
        #[arg(long)]
        no_verify: bool,
    },
    /// Traces Tr(f), .., Tr(f^N) of a matrix file.
    Traces {
        #[arg(long, value_name = "FILE")]
        matrix: String,
        #[arg(long, value_name = "N")]
        count: usize,
    },
    /// Coefficients a_1..a_r of det(1 + t f) for a matrix file.
    Charpoly {
        #[arg(long, value_name = "FILE")]
        matrix: String,
    },
    /// Witt coordinates of a trace sequence.
    Witt {
        #[command(flatten)]
        input: ListInput,
    },
    /// Ghost components of a Witt vector.
    Ghost {
        #[command(flatten)]
        input: WittInput,
        #[arg(long, value_name = "N")]
        count: usize,
    },
    /// Prime-power trace congruences of a matrix file.
    CheckMatrix {
        #[arg(long, value_name = "FILE")]
        matrix: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Congruences of an integer-valued character on a cyclic subgroup.
    CheckCharacter {
        #[arg(long, value_name = "FILE")]
        table: String,
        /// Check k = 1..=KMAX for every prime instead of the automatic bound.
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Coefficientwise congruence of det(1 + t f^(p^k)) and det(1 + t f^(p^(k-1))).
    CheckExterior {
        #[arg(long, value_name = "FILE")]
        matrix: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
    },
    /// Random matrices through every necessary congruence.
    Fuzz {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        entry_bound: u32,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

struct Ctx<'a> {
    format: Format,
    timestamp: bool,
    seed: Option<u64>,
    stdin: &'a mut dyn Read,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                // --help, --version
                Outcome::ok(rendered)
            };
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        timestamp: !cli.no_timestamp,
        seed: cli.seed,
        stdin,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(e),
    }
}

fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> Result<Outcome, Error> {
    match command {
        Command::CheckTraces { input, witness } => {
            let b = read_traces(&input, ctx)?;
            let report = if witness {
                check_trace_sequence_with_witness(&b)
            } else {
                check_trace_sequence(&b)
            };
            Ok(report_outcome(&report, ctx))
        }
        Command::Synthesize { input, no_verify } => {
            let b = read_traces(&input, ctx)?;
            let options = SynthesisOptions { verify: !no_verify };
            match synthesize_with(&b, options) {
                Ok(f) => Ok(Outcome::ok(format!("{}\n", matrix_to_json(&f)))),
                Err(Error::NotATraceSequence { .. }) => {
                    let report = check_trace_sequence(&b);
                    let mut out = report_outcome(&report, ctx);
                    out.stderr = "error: not a trace sequence\n".into();
                    Ok(out)
                }
                Err(e) => Err(e),
            }
        }
        Command::Traces { matrix, count } => {
            if count == 0 {
                return Err(Error::OutOfRange {
                    what: "--count",
                    min: 1,
                    got: 0,
                });
            }
            let f = read_matrix(&matrix, ctx)?;
            let b = trace_sequence(&f, count);
            Ok(Outcome::ok(list_output(
                b.to_string(),
                integers_to_json(b.values()),
                ctx,
            )))
        }
        Command::Charpoly { matrix } => {
            let f = read_matrix(&matrix, ctx)?;
            let a = char_poly_coeffs(&f);
            Ok(Outcome::ok(list_output(
                a.to_string(),
                integers_to_json(a.values()),
                ctx,
            )))
        }
        Command::Witt { input } => {
            let b = read_traces(&input, ctx)?;
            let x = witt_from_ghost(&b);
            Ok(Outcome::ok(list_output(
                x.to_string(),
                rationals_to_json(x.values()),
                ctx,
            )))
        }
        Command::Ghost { input, count } => {
            if count == 0 {
                return Err(Error::OutOfRange {
                    what: "--count",
                    min: 1,
                    got: 0,
                });
            }
            let text = read_list(input.flag.as_deref(), input.positional.as_deref(), "--witt", ctx)?;
            let x: WittVector = text.parse()?;
            let b = ghost_from_witt(&x, count);
            Ok(Outcome::ok(list_output(
                b.to_string(),
                rationals_to_json(b.values()),
                ctx,
            )))
        }
        Command::CheckMatrix { matrix, p, kmax } => {
            let f = read_matrix(&matrix, ctx)?;
            let report = check_matrix_congruences(&f, p, kmax)?;
            Ok(report_outcome(&report, ctx))
        }
        Command::CheckCharacter { table, kmax } => {
            let text = read_source(&table, ctx)?;
            let table = character_table_from_json(&text)?;
            let policy = kmax.map_or(KPolicy::Auto, KPolicy::Cap);
            Ok(report_outcome(&check_character(&table, policy), ctx))
        }
        Command::CheckExterior { matrix, p, k } => {
            let f = read_matrix(&matrix, ctx)?;
            let report = check_exterior_congruence(&f, p, k)?;
            Ok(report_outcome(&report, ctx))
        }
        Command::Fuzz {
            trials,
            dim,
            entry_bound,
        } => {
            let config = fuzz::FuzzConfig {
                trials,
                dim,
                entry_bound,
                seed: ctx.seed.unwrap_or(0),
            };
            let summary = fuzz::run(&config);
            let stdout = match ctx.format {
                Format::Text => render::fuzz_text(&summary),
                Format::Json => json_line(summary.to_json(), ctx),
            };
            Ok(Outcome {
                code: if summary.violations == 0 { EXIT_OK } else { EXIT_FAIL },
                stdout,
                stderr: String::new(),
            })
        }
    }
}

fn read_source(path: &str, ctx: &mut Ctx<'_>) -> Result<String, Error> {
    if path == "-" {
        let mut s = String::new();
        ctx.stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Schema(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Schema(format!("cannot read {path}: {e}")))
    }
}

fn read_matrix(path: &str, ctx: &mut Ctx<'_>) -> Result<IntMatrix, Error> {
    matrix_from_json(&read_source(path, ctx)?)
}

fn read_list(
    flag: Option<&str>,
    positional: Option<&str>,
    name: &str,
    ctx: &mut Ctx<'_>,
) -> Result<String, Error> {
    match flag.or(positional) {
        Some("-") => read_source("-", ctx),
        Some(text) => Ok(text.to_string()),
        None => Err(Error::Schema(format!(
            "missing input: pass {name} LIST, a positional LIST, or - for stdin"
        ))),
    }
}

fn read_traces(input: &ListInput, ctx: &mut Ctx<'_>) -> Result<TraceSequence, Error> {
    read_list(input.flag.as_deref(), input.positional.as_deref(), "--traces", ctx)?.parse()
}

fn timestamp() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn json_line(mut value: Value, ctx: &Ctx<'_>) -> String {
    if ctx.timestamp {
        if let Value::Object(map) = &mut value {
            map.insert("timestamp".into(), json!(timestamp()));
        }
    }
    format!("{value}\n")
}

fn list_output(text: String, json: Value, ctx: &Ctx<'_>) -> String {
    match ctx.format {
        Format::Text => format!("{text}\n"),
        Format::Json => format!("{json}\n"),
    }
}

fn report_outcome(report: &CongruenceReport, ctx: &Ctx<'_>) -> Outcome {
    let stdout = match ctx.format {
        Format::Text => render::report_text(report),
        Format::Json => json_line(serde_json::to_value(report).expect("report serializes"), ctx),
    };
    Outcome {
        code: if report.overall() { EXIT_OK } else { EXIT_FAIL },
        stdout,
        stderr: String::new(),
    }
}
