use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use unip_core::selmer::H2Cap;

mod commands;
mod report;

use commands::{Failure, Mode, SelmerArgs};
use report::Format;

/// Tables for the free Lie algebra on two generators, its quotient W and
/// the Selmer dimension ledger.
#[derive(Parser, Debug)]
#[command(name = "unip", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 20_240_601)]
    seed: u64,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Witt dimensions with the bigraded cross-check.
    Witt {
        #[arg(long, default_value_t = 16)]
        max_degree: usize,
    },
    /// Lyndon basis words with their standard bracketings.
    Basis {
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
    },
    /// Graded pieces of W with basis words and characters.
    Wgraded {
        #[arg(long, default_value_t = 8)]
        max_level: usize,
    },
    /// Leading-term congruences under random automorphisms.
    GaloisCheck {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        max_degree: usize,
        /// Sample only diagonal automorphisms.
        #[arg(long)]
        diagonal: bool,
    },
    /// Per-level Selmer dimension ledger and verdict.
    Selmer {
        #[arg(long, default_value_t = 0)]
        r: u64,
        #[arg(long, default_value_t = 1)]
        s: u64,
        #[arg(long, value_enum, default_value = "theorem-0-2")]
        mode: Mode,
        /// Twists k < 0 where non-vanishing is not assumed.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        exceptional: Vec<i64>,
        /// Cap on dim H2 at exceptional levels: an integer or `symbolic`.
        #[arg(long, default_value = "symbolic", value_parser = parse_cap)]
        h2_cap: H2Cap,
        #[arg(long, default_value_t = 10)]
        max_level: usize,
    },
}

fn parse_cap(s: &str) -> Result<H2Cap, String> {
    if s == "symbolic" {
        return Ok(H2Cap::Symbolic);
    }
    s.parse::<u64>()
        .map(H2Cap::Bounded)
        .map_err(|_| format!("expected an integer or `symbolic`, got `{s}`"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Witt { max_degree } => commands::witt(*max_degree),
        Command::Basis { max_degree } => commands::basis(*max_degree),
        Command::Wgraded { max_level } => commands::wgraded(*max_level),
        Command::GaloisCheck {
            trials,
            max_degree,
            diagonal,
        } => commands::galois_check(cli.seed, *trials, *max_degree, *diagonal),
        Command::Selmer {
            r,
            s,
            mode,
            exceptional,
            h2_cap,
            max_level,
        } => commands::selmer(&SelmerArgs {
            r: *r,
            s: *s,
            mode: *mode,
            exceptional: exceptional.clone(),
            h2_cap: *h2_cap,
            max_level: *max_level,
        }),
    };
    let (mut report, ok) = match outcome {
        Ok(x) => x,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    report.meta("seed", cli.seed);
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: property violation, see the report");
        ExitCode::from(1)
    }
}
