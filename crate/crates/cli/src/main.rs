//! `nvep`: solve, reduce, decide and benchmark n-vehicle exploration instances.
//!
//! Exit codes: 0 success / yes / accept, 1 error, 2 infeasible / no / reject,
//! 3 the two Hamiltonian-path routes disagree.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "nvep", version, about = "Exact n-vehicle exploration toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the best refueling order of an instance file
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Also run brute force (when under its cap) and compare
        #[arg(long)]
        cross_check: bool,
    },
    /// Turn a graph file into an instance file
    Reduce {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Forbidden)]
        semantics: SemanticsArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a graph has a Hamiltonian path
    Hp {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = ViaArg::Nvep)]
        via: ViaArg,
    },
    /// Check a sequence against an instance and a distance threshold
    Verify {
        instance: PathBuf,
        /// 1-based vehicle indices, e.g. "1 2 3"
        #[arg(long)]
        sequence: String,
        #[arg(long)]
        threshold: String,
    },
    /// Generate a random instance or graph
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Family::Gnp)]
        family: Family,
        /// Edge probability for the gnp family
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value = "1")]
        a_min: String,
        #[arg(long, default_value = "100")]
        a_max: String,
        #[arg(long, default_value = "1/10")]
        b_min: String,
        #[arg(long, default_value = "10")]
        b_max: String,
        #[arg(long, default_value_t = 10)]
        max_den: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the solvers or the reduction over a size ladder
    Bench {
        #[arg(long, value_enum, default_value_t = Suite::Solvers)]
        suite: Suite,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest n for branch and bound in the solvers suite
        #[arg(long, default_value_t = 10)]
        bnb_max_n: usize,
        /// Random graphs per density step in the reduction suite
        #[arg(long, default_value_t = 3)]
        graphs_per_density: usize,
    },
    /// Score every order of a graph's reduction under the zero-distance reading
    Probe { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Auto,
    Brute,
    Dp,
    Bnb,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Forbidden,
    Zero,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ViaArg {
    Nvep,
    Backtrack,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Instance,
    Graph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gnp,
    Path,
    Cycle,
    Empty,
    Complete,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Solvers,
    Reduction,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
