use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rcm::commands::{self, CanonicalArgs, EnumerateArgs, OrderArgs, TableArgs, VerifyArgs};
use rcm::report::CommandResult;
use rcm::CliError;

/// Orders, enumeration and canonical forms for groups of regular circulant
/// matrices over finite fields and residue rings.
#[derive(Debug, Parser)]
#[command(name = "rcm", version)]
struct Cli {
    /// Pretty-print the JSON result
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order of the group of regular circulants
    Order(OrderArgs),
    /// Table of orders over prime fields and their extensions
    Table(TableArgs),
    /// Count regular circulants by exhaustive scan
    Enumerate(EnumerateArgs),
    /// Canonical form of a regular circulant
    Canonical(CanonicalArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<Option<CommandResult>, CliError> {
    Ok(match &cli.command {
        Command::Order(a) => Some(commands::order(a)?),
        Command::Table(a) => commands::table(a, out)?,
        Command::Enumerate(a) => Some(commands::enumerate(a, out)?),
        Command::Canonical(a) => Some(commands::canonical(a)?),
        Command::Verify(a) => Some(commands::verify(a, out)?),
    })
}

fn print(result: &CommandResult, pretty: bool, out: &mut dyn Write) -> io::Result<()> {
    let json = result.to_json();
    if pretty {
        serde_json::to_writer_pretty(&mut *out, &json)?;
    } else {
        serde_json::to_writer(&mut *out, &json)?;
    }
    writeln!(out)?;
    out.flush()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let outcome = run(&cli, &mut out).and_then(|result| match result {
        Some(r) => {
            print(&r, cli.pretty, &mut out).map_err(CliError::stdout)?;
            Ok(r.failed)
        }
        None => out.flush().map(|_| false).map_err(CliError::stdout),
    });
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("rcm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
