mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

/// General Sombor index workbench: unicyclic families, exhaustive
/// enumeration and numeric checks of the extremal results.
#[derive(Debug, Parser)]
#[command(name = "sombor", version)]
pub struct Cli {
    /// Worker threads for enumeration and grid checks [default: all cores]
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print SO_alpha of every graph in a graph6 or edge-list file
    Index {
        /// Input file, `-` for stdin
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
    },
    /// Build a family member: C:n, U:n,d,i or CF:p,q,r
    Family {
        #[arg(long)]
        spec: String,
        /// graph6 output file [default: stdout]
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Also print the closed-form SO_alpha (U:n,d,1 with d >= 4 only)
        #[arg(long, requires = "alpha")]
        closed_form: bool,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// List unicyclic graphs on n vertices up to isomorphism
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diameter: Option<usize>,
        #[arg(long)]
        girth: Option<usize>,
        /// Print only the number of classes
        #[arg(long)]
        count_only: bool,
        /// graph6 output file [default: stdout]
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Largest n accepted (at most 16)
        #[arg(long, default_value_t = sombor_core::enumerate::DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Apply a relocation or an edge swap to a single graph
    #[command(group(ArgGroup::new("op").required(true).args(["relocate", "swap"])))]
    Transform {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Move N(v) minus u onto u, given as `u,v`
        #[arg(long, value_name = "U,V")]
        relocate: Option<String>,
        /// Edge swap, e.g. "+0,3 -1,2"
        #[arg(long, allow_hyphen_values = true)]
        swap: Option<String>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for the maximizers of SO_alpha over U(n, d)
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        alpha: f64,
        /// Relative tie tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// CSV report file
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        /// Fill the `seconds` column of the report
        #[arg(long)]
        timing: bool,
    },
    /// Sign checks of an analytic claim on a grid
    CheckLemma {
        /// L1, L5, L6, L7, gpos, hpos or all
        #[arg(long)]
        id: String,
        #[arg(long)]
        alpha_start: Option<f64>,
        #[arg(long)]
        alpha_stop: Option<f64>,
        #[arg(long)]
        alpha_step: Option<f64>,
        #[arg(long)]
        x_start: Option<f64>,
        #[arg(long)]
        x_stop: Option<f64>,
        #[arg(long)]
        x_step: Option<f64>,
        /// CSV report file
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
    /// Negativity checks of the proof constants
    CheckConstant {
        /// Constant name or `all`
        #[arg(long, default_value = "all")]
        id: String,
        #[arg(long)]
        alpha_max: Option<f64>,
        #[arg(long)]
        step: Option<f64>,
    },
    /// Randomized check that relocation strictly increases SO_alpha
    PropTest {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Fixed alpha [default: uniform on (0.001, 0.999)]
        #[arg(long)]
        alpha: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
