use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use galois_kit::config::{DEFAULT_DEGREE_CAP, DEFAULT_SEED};

/// Exact Galois theory over the rationals.
#[derive(Debug, Parser)]
#[command(name = "galois-kit", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Emit a machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest absolute field degree any construction may reach.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    pub degree_cap: usize,
    /// Seed for the randomized steps of mod-p factorization.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Comma-separated primes sampled by the quintic Frobenius witness.
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Print the wall-clock time of the command on stderr.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor a polynomial over the rationals.
    Factor { poly: String },
    /// Build the splitting field and list the roots.
    Split { poly: String },
    /// Compute the Galois group of the splitting field.
    Group { poly: String },
    /// Minimal polynomials by the orbit product and by linear algebra, side by side.
    Minpoly {
        poly: String,
        /// Element of the splitting field; may use `t`, the generator names
        /// `a1, a2, …` and the roots `x0, x1, …`. Repeatable.
        #[arg(long = "element")]
        elements: Vec<String>,
    },
    /// Fixed field of the subgroup generated by the given automorphisms.
    Fixed {
        poly: String,
        /// Comma-separated automorphism indices, as listed by `group`.
        #[arg(long, value_delimiter = ',')]
        subgroup: Vec<usize>,
    },
    /// Associated group chain of the normalized radical tower.
    ChainGroups(ChainSource),
    /// Normalize a radical chain into a nested set of normal radical extensions.
    Normalize(ChainSource),
    /// Normalize a radical chain and verify every tower condition.
    VerifyTower(ChainSource),
    /// Decide whether the Galois group of a polynomial is solvable.
    Solvable { poly: String },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["chain", "chain_json"])))]
pub struct ChainSource {
    /// Chain description file, `{"stages": [{"k": 2, "radicand": "2"}, …]}`; `-` reads stdin.
    #[arg(long)]
    pub chain: Option<PathBuf>,
    /// The chain description given inline.
    #[arg(long)]
    pub chain_json: Option<String>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Factor { .. } => "factor",
            Command::Split { .. } => "split",
            Command::Group { .. } => "group",
            Command::Minpoly { .. } => "minpoly",
            Command::Fixed { .. } => "fixed",
            Command::ChainGroups(_) => "chain-groups",
            Command::Normalize(_) => "normalize",
            Command::VerifyTower(_) => "verify-tower",
            Command::Solvable { .. } => "solvable",
        }
    }
}
