//! `baxterlab`: compute in free Baxter algebras and check identities from the
//! command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "baxterlab",
    version,
    about = "Exact arithmetic in free Baxter algebras"
)]
pub struct Cli {
    /// Print `(x)` for the tensor sign and `lambda` for the weight.
    #[arg(long, global = true)]
    pub ascii: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    First,
    Second,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Both,
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stirling numbers: one value with --k, otherwise row n as a JSON array.
    Stirling {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Multiply two elements read from JSON files.
    Product {
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        /// Ring for files without a "ring" key: lambda-int, lambda-mod:P, int:W or mod:P:W.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the human-readable form instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Raise an element read from a JSON file to a power.
    Power {
        #[arg(long)]
        elem: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        text: bool,
    },
    /// Expand (1⊗x)^n over Z[λ].
    #[command(name = "expand-p1x")]
    ExpandP1x {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Both)]
        format: Format,
    },
    /// Run identity checks (circ, conn1, conn2, ref1, ref2, egf) up to --n-max,
    /// or congruence checks (sni, xpow, pa, freshman, fermat) for --prime.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub identity: String,
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub trials: u32,
    /// Element for `pa` (JSON file); defaults to a fixed battery.
    #[arg(long)]
    pub elem: Option<PathBuf>,
    /// Comma-separated exponents for `freshman`; defaults to every word of
    /// up to three factors with exponents at most 2.
    #[arg(long)]
    pub word: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match commands::run(&cli, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
