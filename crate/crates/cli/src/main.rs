use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

/// Exact relativistic corrections for the d-dimensional harmonic oscillator.
#[derive(Parser, Debug)]
#[command(name = "salpeter", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// eps0, eps1 and eps2 for one state from every applicable method.
    Correct(CorrectArgs),
    /// Level table up to N = Nmax as CSV or JSON.
    Table(TableArgs),
    /// Energy level diagram with first-order splitting.
    Diagram(DiagramArgs),
    /// Cross-method and quadrature verification over a grid.
    Verify(VerifyArgs),
    /// Quadrature values for one state.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    All,
    Closed,
    Kramers,
    Laguerre,
    Ladder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Svg,
    Text,
}

#[derive(clap::Args, Debug)]
pub struct CorrectArgs {
    #[arg(long)]
    pub d: u32,
    /// Radial quantum number.
    #[arg(long)]
    pub n: Option<u64>,
    /// Angular momentum.
    #[arg(long)]
    pub l: Option<u32>,
    /// Principal level N = 2n + l (d = 1, or ladder mode with --m).
    #[arg(long = "N")]
    pub level: Option<u64>,
    /// Angular quantum number of the 2D ladder basis.
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    #[arg(long, value_enum, default_value = "all")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long = "Nmax")]
    pub n_max: u64,
    /// hbar omega / (m c^2), as p/q or a decimal.
    #[arg(long, default_value = "1/1000")]
    pub lambda: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct DiagramArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long = "Nmax")]
    pub n_max: u64,
    #[arg(long, default_value = "1/1000")]
    pub lambda: String,
    /// Vertical magnification of the shifts; 0.1/lambda when omitted.
    #[arg(long)]
    pub exaggeration: Option<String>,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: DiagramFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "default")]
    pub grid: String,
    /// Corrupt one closed-form coefficient; the run must then fail.
    #[arg(long)]
    pub perturb: bool,
    /// Skip the quadrature checks.
    #[arg(long)]
    pub no_oracle: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub l: u32,
    /// Highest power of eta = r^2 checked against the exact moments.
    #[arg(long, default_value_t = 4)]
    pub smax: u32,
    /// Also evaluate the off-diagonal element <n'| eta^s |n>.
    #[arg(long = "to")]
    pub target: Option<u64>,
    #[arg(long, default_value_t = 2)]
    pub s: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Correct(args) => commands::correct(&args),
        Command::Table(args) => commands::table(&args),
        Command::Diagram(args) => commands::diagram(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Oracle(args) => commands::oracle(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("salpeter: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
