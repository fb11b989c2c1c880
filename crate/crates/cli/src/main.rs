use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use tonal_cli::{
    parse_day_or_name, render_convert, render_orbit, render_table, OutputFormat, Restrict,
    TableName,
};
use tonal_core::{verify, DayName, Translation};

const USAGE_ERROR: u8 = 1;
const VERIFY_FAILED: u8 = 2;

/// Conversions and structure tables for the 260-day ritual count.
#[derive(Debug, Parser)]
#[command(name = "tonal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Show everything about one day, given as `1..260` or `<1..13>-<Sign>`.
    Convert {
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print a structure table.
    Table {
        #[arg(value_enum)]
        name: TableName,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Layout only: draw rows top to bottom and columns right to left, as on the plates.
        #[arg(long)]
        mirror: bool,
    },
    /// Iterate a translation from a seed name.
    Orbit {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=12))]
        a: u8,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=19))]
        b: u8,
        #[arg(long, value_parser = parse_seed)]
        seed: DayName,
        #[arg(long, value_enum, default_value_t = Restrict::None)]
        restrict: Restrict,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run every self-check suite; exits 2 if any check fails.
    Verify,
}

fn parse_seed(s: &str) -> Result<DayName, String> {
    s.parse::<DayName>().map_err(|e| e.to_string())
}

fn emit(s: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(s.as_bytes());
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE_ERROR),
            };
        }
    };

    match cli.command {
        Command::Convert { input, format } => match parse_day_or_name(&input) {
            Ok(day) => emit(&render_convert(day, format)),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(USAGE_ERROR)
            }
        },
        Command::Table {
            name,
            format,
            mirror,
        } => emit(&render_table(name, format, mirror)),
        Command::Orbit {
            a,
            b,
            seed,
            restrict,
            format,
        } => emit(&render_orbit(
            Translation::new(a as i64, b as i64),
            seed,
            restrict,
            format,
        )),
        Command::Verify => {
            let report = verify::run_all();
            emit(&format!("{report}\n"));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERIFY_FAILED)
            }
        }
    }
}
