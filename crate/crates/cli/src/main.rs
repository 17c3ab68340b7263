use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wythoff_cli::commands::{
    array_note, cmd_array, cmd_export, cmd_seq, cmd_table, ArrayKind, TableChoice,
};
use wythoff_cli::render::{Format, RenderSpec};
use wythoff_cli::sequence::SequenceName;
use wythoff_cli::verify::{cmd_verify, FixtureSource, Suite, VerifyOptions};
use wythoff_cli::{CliError, EXIT_MISMATCH, EXIT_OK};

/// Exact-integer Zeckendorf, fibbinary and Wythoff array toolkit.
#[derive(Debug, Parser)]
#[command(name = "wythoff", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print terms of a sequence as `index value` lines
    Seq {
        name: SequenceName,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Render a window of an array
    Array {
        kind: ArrayKind,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        /// Number of columns, including columns -1 and 0 for wythoff-extended
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        cols: u64,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Render the sparse table with p rows
    Table {
        kind: TableChoice,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Write an OEIS b-file starting at the sequence's OEIS offset
    Export {
        name: SequenceName,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Run verification suites and compare exports with the reference fixtures
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
        /// Directory of fixture files to use instead of the bundled ones
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Omit the column labels
    #[arg(long)]
    no_labels: bool,
    /// Marker printed for empty cells in text output
    #[arg(long, default_value = ".")]
    empty: String,
}

impl From<RenderArgs> for RenderSpec {
    fn from(a: RenderArgs) -> Self {
        RenderSpec {
            format: a.format,
            show_labels: !a.no_labels,
            empty_cell_marker: a.empty,
        }
    }
}

fn dimension(v: u64) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| CliError::Usage(format!("{v} is too large")))
}

fn run(command: Command) -> Result<u8, CliError> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut code = EXIT_OK;
    match command {
        Command::Seq { name, count } => cmd_seq(name, count, &mut out)?,
        Command::Export { name, count } => cmd_export(name, count, &mut out)?,
        Command::Array {
            kind,
            rows,
            cols,
            render,
        } => {
            let (rows, cols) = (dimension(rows)?, dimension(cols)?);
            let text = cmd_array(kind, rows, cols, &render.into())?;
            out.write_all(text.as_bytes()).map_err(CliError::write)?;
            if let Some(note) = array_note(kind, rows, cols) {
                eprintln!("{note}");
            }
        }
        Command::Table { kind, p, render } => {
            let text = cmd_table(kind, p, &render.into())?;
            out.write_all(text.as_bytes()).map_err(CliError::write)?;
        }
        Command::Verify {
            suite,
            max_n,
            max_k,
            fixtures,
        } => {
            let opts = VerifyOptions {
                max_n,
                max_k,
                fixtures: fixtures.map_or(FixtureSource::Bundled, FixtureSource::Dir),
            };
            let report = cmd_verify(suite, &opts)?;
            out.write_all(report.render().as_bytes())
                .map_err(CliError::write)?;
            if !report.passed() {
                code = EXIT_MISMATCH;
            }
        }
    }
    out.flush().map_err(CliError::write)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.is_broken_pipe() => ExitCode::from(EXIT_OK),
        Err(e) => {
            eprintln!("wythoff: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
