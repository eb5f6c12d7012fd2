mod commands;
mod dot;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser)]
#[command(
    name = "zham",
    version,
    about = "Z-mapping, Hamiltonicity and matching toolkit"
)]
struct Cli {
    /// Search node limit per solve.
    #[arg(long, global = true, env = "ZHAM_BUDGET", default_value_t = zham_core::DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Instance file (`D n`, `B n` or `G n` header); `-` reads stdin.
    #[arg(default_value = "-")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Map a digraph to its balanced bipartite graph.
    Zmap {
        #[command(flatten)]
        input: Input,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write a DOT rendering (x-part boxes left, y-part circles right).
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Map a balanced bipartite graph with no `x_i y_i` edge back to a digraph.
    Unzmap {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Hamiltonian cycle of a digraph, graph or bipartite graph.
    Ham(Input),
    /// Hamiltonian cycle of a balanced bipartite graph, as x/y labels.
    Bipham(Input),
    /// Maximum matching of a balanced bipartite graph.
    Match(Input),
    /// Two edge-disjoint perfect matchings of a balanced bipartite graph.
    Pm2(Input),
    /// Evaluate degree-condition hypotheses.
    Conditions {
        #[command(flatten)]
        input: Input,
        /// Only this condition.
        #[arg(long)]
        id: Option<String>,
        /// Parameter for the k-form conditions.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Split a Hamiltonian cycle of Z(D) into its two alternating halves.
    Pullback {
        #[command(flatten)]
        input: Input,
        /// Cycle as labels, e.g. `x1,y2,x3,y1,x2,y3`.
        #[arg(long)]
        cycle: String,
    },
    /// Push a Hamiltonian cycle of D forward to a perfect matching of Z(D).
    Pushforward {
        #[command(flatten)]
        input: Input,
        /// Cycle as vertices, e.g. `1,2,3`.
        #[arg(long)]
        cycle: String,
    },
    /// Sweep claims over enumerated or sampled instances.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated claim ids; all claims when omitted.
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    /// Smallest order; defaults to `--n-max`.
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Samples per order (random mode).
    #[arg(long)]
    samples: Option<u64>,
    /// Generator seed (random mode).
    #[arg(long)]
    seed: Option<u64>,
    /// Append counterexamples to this JSON-lines file.
    #[arg(long)]
    store: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Stdout format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let budget = zham_core::Budget(cli.budget);
    match cli.command {
        Command::Zmap { input, output, dot } => commands::zmap(&input.input, output, dot),
        Command::Unzmap { input, output } => commands::unzmap(&input.input, output),
        Command::Ham(input) => commands::ham(&input.input, budget),
        Command::Bipham(input) => commands::bipham(&input.input, budget),
        Command::Match(input) => commands::matching(&input.input),
        Command::Pm2(input) => commands::pm2(&input.input, budget),
        Command::Conditions { input, id, k } => commands::conditions(&input.input, id, k),
        Command::Pullback { input, cycle } => commands::pullback(&input.input, &cycle),
        Command::Pushforward { input, cycle } => commands::pushforward(&input.input, &cycle),
        Command::Verify(args) => commands::verify(args, budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zham: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
