//! `ribbon`: continued fractions, two-bridge ribbon classification and
//! symmetric union presentations from the command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 link (even determinant),
//! 3 not ribbon, 4 verification failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ribbon_core::Error;

#[derive(Debug, Parser)]
#[command(
    name = "ribbon",
    version,
    about = "Two-bridge ribbon knots and their symmetric unions"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Continued-fraction arithmetic.
    #[command(subcommand)]
    Cf(CfCommand),
    /// Decide ribbonness of K(p,q) and list every Lisca witness.
    Classify {
        #[arg(allow_hyphen_values = true)]
        knot: String,
    },
    /// Build or check symmetric union presentations.
    #[command(subcommand)]
    Symun(SymunCommand),
    /// Enumerations.
    #[command(subcommand)]
    List(ListCommand),
    /// Draw a presentation document as schematic SVG.
    Render { document: PathBuf, output: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CfCommand {
    /// Evaluate `[a1,...,an]`.
    Eval {
        #[arg(allow_hyphen_values = true)]
        cf: String,
    },
    /// Expand a positive rational `p/q`.
    Expand {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
}

#[derive(Debug, Subcommand)]
enum SymunCommand {
    /// Present a ribbon knot `K(p,q)`, or build one from family parameters.
    Present(PresentArgs),
    /// Re-check a presentation document; exit 4 on any failed check.
    Verify { document: PathBuf },
}

#[derive(Debug, Args)]
struct PresentArgs {
    /// Target knot, e.g. "K(25,18)".
    #[arg(allow_hyphen_values = true, conflicts_with = "family")]
    knot: Option<String>,
    /// F1, F2+, F2-, F3+ or F3-.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    t: Option<String>,
    /// Family 1 only.
    #[arg(long)]
    m: Option<String>,
    /// Family 1 only.
    #[arg(long)]
    k: Option<String>,
    /// Family 1 only: +1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
}

#[derive(Debug, Subcommand)]
enum ListCommand {
    /// Every ribbon K(p,q) in normal form with p ≤ N.
    Ribbon {
        #[arg(long)]
        pmax: u64,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::Domain(_) | Error::EvenDeterminantRoot(_) => 1,
        Error::Link(_) => 2,
        Error::NotRibbon(_) => 3,
        Error::Verification(_) => 4,
    }
}

fn configure_threads() {
    let threads = std::env::var("SYMUN_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    if threads > 0 {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    configure_threads();
    match commands::run(cli.command, cli.json) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
