mod commands;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use plethysm_core::{Error, Partition};
use serde::Serialize;
use serde_json::Value;

use commands::Report;

/// Extreme constituents of plethysms of Schur functions.
#[derive(Debug, Parser)]
#[command(name = "plethysm", version)]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock time in the output.
    #[arg(long, global = true)]
    timing: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest mn accepted by a full oracle decomposition.
    #[arg(long, global = true, env = "PLETHYSM_ORACLE_BUDGET", default_value_t = 16)]
    budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dominance-minimal and dominance-maximal constituents of s_NU[s_MU].
    Extrema {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, conflicts_with_all = ["min", "both"])]
        max: bool,
        #[arg(long, conflicts_with = "both")]
        min: bool,
        #[arg(long)]
        both: bool,
    },
    /// Lexicographically greatest and least constituents.
    Lex {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        #[arg(long)]
        greatest: bool,
        #[arg(long)]
        least: bool,
        /// Show the construction of the least families, one per family size.
        #[arg(long)]
        trace: bool,
    },
    /// Closed families of D tableaux of shape MU.
    Closed {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        d: usize,
    },
    /// Lower and upper bounds on the multiplicity of s_LAMBDA.
    Multiplicity {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        /// Also compute the exact value by brute force.
        #[arg(long)]
        oracle: bool,
    },
    /// Brute-force plethysm coefficients.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Covering relation of majorization on tableaux, as a DOT digraph.
    Poset(PosetArgs),
    /// Re-run the reference checks.
    VerifyPaper {
        #[arg(long, conflicts_with = "full")]
        fast: bool,
        /// Include the slow single-coefficient check at mn = 48.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Every constituent of s_NU[s_MU].
    Decompose {
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
    },
    /// The coefficient of s_LAMBDA in s_NU[s_MU].
    Coeff {
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
}

#[derive(Debug, Args)]
struct PosetArgs {
    #[arg(value_parser = parse_partition)]
    mu: Partition,
    /// Largest entry allowed.
    max_entry: usize,
    /// Keep only tableaux of at most this rank.
    #[arg(long)]
    max_rank: Option<usize>,
    /// Write the DOT text to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Serialize)]
struct CommandResult<'a> {
    schema: u32,
    command: &'a str,
    inputs: &'a Value,
    outputs: &'a Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::ParsePartition { .. }
        | Error::ParseTableau { .. }
        | Error::SizeMismatch { .. }
        | Error::IncomparableSizes(..)
        | Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_VERIFY,
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let budget = plethysm_core::oracle::OracleBudget {
        decomposition_cap: cli.budget,
        ..Default::default()
    };
    match &cli.command {
        Command::Extrema { mu, nu, max, min, .. } => commands::extrema(mu, nu, !*max, !*min),
        Command::Lex { mu, nu, greatest, least, trace } => {
            let neither = !greatest && !least;
            commands::lex(mu, nu, *greatest || neither, *least || neither, *trace)
        }
        Command::Closed { mu, d } => commands::closed(mu, *d),
        Command::Multiplicity { mu, nu, lambda, oracle } => commands::multiplicity(mu, nu, lambda, *oracle),
        Command::Oracle(OracleCommand::Decompose { nu, mu }) => commands::decompose(nu, mu, &budget),
        Command::Oracle(OracleCommand::Coeff { nu, mu, lambda }) => commands::coefficient(nu, mu, lambda, &budget),
        Command::Poset(args) => commands::poset(&args.mu, args.max_entry, args.max_rank),
        Command::VerifyPaper { full, .. } => Ok(verify::run(*full)),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }

    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let elapsed = start.elapsed();

    let out_file = match &cli.command {
        Command::Poset(args) => args.out.clone(),
        _ => None,
    };
    if let Some(path) = out_file {
        if let Err(e) = std::fs::write(&path, &report.text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_VERIFY);
        }
    }

    if cli.json {
        let doc = CommandResult {
            schema: 1,
            command: report.command,
            inputs: &report.inputs,
            outputs: &report.outputs,
            timing_ms: cli.timing.then(|| elapsed.as_millis()),
        };
        emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("reports serialize")));
    } else {
        if matches!(&cli.command, Command::Poset(args) if args.out.is_some()) {
            emit(&format!("wrote {} lines\n", report.text.lines().count()));
        } else {
            emit(&report.text);
        }
        if cli.timing {
            emit(&format!("time: {} ms\n", elapsed.as_millis()));
        }
    }

    if report.failed {
        ExitCode::from(EXIT_VERIFY)
    } else {
        ExitCode::SUCCESS
    }
}
