//! `hankel`: exact Hankel moment matrices from the command line.
//!
//! Exit codes: 0 ok, 1 internal failure, 2 usage or domain error,
//! 3 disagreement between independent computations, 4 certification
//! failure, 5 verification-suite failure.

mod commands;
mod nlist;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hankel_core::verify::Formula;
use hankel_core::FamilyParams;

use crate::nlist::NList;

#[derive(Parser, Debug)]
#[command(name = "hankel", version, about = "Exact Hankel moment matrices of classical and q-families")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write output to FILE instead of stdout
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GridKind {
    Default,
    Empty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determinant three ways: coefficient rows, product formula, Bareiss
    Det {
        /// e.g. laguerre:alpha=1/2, jacobi:alpha=0,beta=0, qlaguerre:q=1/2,t=1/2
        family: FamilyParams,
        #[arg(long)]
        n: usize,
    },
    /// Exact inverse of the moment matrix
    Inv {
        family: FamilyParams,
        #[arg(long)]
        n: usize,
        /// Also check G * inverse = I and compare with Gauss-Jordan
        #[arg(long)]
        verify: bool,
    },
    /// Smallest-eigenvalue lower bound with its exact certificate
    Bound {
        family: FamilyParams,
        #[arg(long)]
        n: usize,
        /// Include the Christoffel-Darboux form of the bound
        #[arg(long)]
        cd: bool,
        /// Report a failed certificate without the nonzero exit code
        #[arg(long)]
        no_certify: bool,
    },
    /// Large-n table of the bound against its asymptote
    Asymptote {
        family: FamilyParams,
        /// Comma list and inclusive ranges, e.g. 256,1024 or 0..50
        #[arg(long)]
        n: NList,
    },
    /// Run the invariant grid
    Verify {
        /// Largest order in the grid
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Restrict to these families (repeatable); replaces the grid's families
        #[arg(long = "family")]
        families: Vec<FamilyParams>,
        #[arg(long, value_enum, default_value_t = GridKind::Default)]
        grid: GridKind,
        /// Perturb one closed form to check that the grid notices
        #[arg(long, hide = true)]
        mutate: Option<Formula>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Det { family, n } => commands::det(family, *n),
        Command::Inv { family, n, verify } => commands::inv(family, *n, *verify),
        Command::Bound {
            family,
            n,
            cd,
            no_certify,
        } => commands::bound(family, *n, *cd, !*no_certify),
        Command::Asymptote { family, n } => commands::asymptote(family, n),
        Command::Verify {
            max_n,
            families,
            grid,
            mutate,
        } => commands::verify(*max_n, families, *grid, *mutate),
    };
    let report = match out {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if let Err(e) = output::emit(&report, cli.format, cli.out.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if let Some(msg) = &report.failure {
        eprintln!("{msg}");
    }
    ExitCode::from(report.status)
}
