//! `iwahori`: Hecke algebra reductions, link invariants and Specht module
//! tables from the command line.

mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Output;
use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "iwahori",
    version,
    about = "Iwahori-Hecke algebras, Markov traces and Specht modules"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Number of strands; may also be given as a `Bn:` prefix of the word.
    #[arg(long, global = true)]
    strands: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Coefficient field. Specialized fields use parameters (-1, q).
    #[arg(long, global = true, value_enum, env = "IWAHORI_FIELD", default_value_t = FieldArg::Generic)]
    field: FieldArg,
    /// Characteristic for `--field Fp`.
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Value of q for `--field Q` (a rational) or `--field Fp` (0 < q < p).
    #[arg(long, global = true)]
    q: Option<String>,
    /// Extra diagnostics on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldArg {
    Generic,
    #[value(name = "Q")]
    Q,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a braid word in the T_w basis.
    Reduce { word: String },
    /// HOMFLYPT polynomial of the closure.
    Homfly { word: String },
    /// Jones polynomial of the closure.
    Jones { word: String },
    /// Dimensions of Specht modules and their simple heads.
    Specht {
        #[arg(long)]
        n: usize,
    },
    /// Run the built-in consistency checks.
    Verify {
        /// Bounded property checks.
        #[arg(long, conflicts_with = "exhaustive")]
        quick: bool,
        /// Every word up to a length bound, checked against the relations.
        #[arg(long, requires = "n")]
        exhaustive: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Replace the quadratic relation by a wrong one.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Coordinates of the closure in the basis of closed b_lambda.
    Decompose { word: String },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let cfg = &cli.config;
    match cli.command {
        Command::Reduce { word } => commands::reduce(cfg, &word),
        Command::Homfly { word } => commands::homfly(cfg, &word),
        Command::Jones { word } => commands::jones(cfg, &word),
        Command::Specht { n } => commands::specht(cfg, n),
        Command::Verify {
            quick: _,
            exhaustive,
            n,
            max_len,
            inject_fault,
        } => {
            if exhaustive {
                commands::verify_exhaustive(cfg, n.unwrap_or(3), max_len, inject_fault)
            } else {
                commands::verify_quick(cfg, inject_fault)
            }
        }
        Command::Decompose { word } => commands::decompose(cfg, &word),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("iwahori: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
