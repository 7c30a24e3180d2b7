use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "multibraid", version, about = "Bicolor-eliminability and freeness of multi-braid arrangements")]
struct Cli {
    /// Seed for the oracle's evaluation points and for census sampling.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Worker threads for census and oracle sweeps (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify A_l(n)[G] for a bicolored graph file.
    Classify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: u32,
        /// Comma-separated vertex shifts n_1,...,n_{l+1}; zeros if omitted.
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u32>>,
    },
    /// Tabulate isomorphism classes of bicolored graphs on N vertices.
    Census {
        #[arg(long)]
        vertices: usize,
        /// Do not identify graphs that differ by swapping the colors.
        #[arg(long)]
        no_swap: bool,
        /// Cross-check every class with the derivation oracle at k = 1, n = 0.
        #[arg(long)]
        oracle: bool,
        /// Random labeled graphs to draw (six vertices only).
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Run the derivation oracle on a spec or a raw arrangement.
    Oracle {
        #[arg(long, conflicts_with = "arrangement", required_unless_present = "arrangement")]
        spec: Option<PathBuf>,
        #[arg(long)]
        arrangement: Option<PathBuf>,
        /// Highest degree to search for generators (defaults to |m|).
        #[arg(long)]
        budget: Option<u32>,
    },
    /// Analyze the braid deformation encoded by a directed graph.
    Deform {
        #[arg(long)]
        digraph: PathBuf,
        #[arg(long)]
        k: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    let seed = cli.seed;
    let outcome = pool.install(|| match cli.command {
        Command::Classify { graph, k, n } => commands::classify(&graph, k, n),
        Command::Census { vertices, no_swap, oracle, sample } => {
            commands::census(vertices, !no_swap, oracle, sample, seed)
        }
        Command::Oracle { spec, arrangement, budget } => commands::oracle(spec, arrangement, budget, seed),
        Command::Deform { digraph, k } => commands::deform(&digraph, k),
    });
    match outcome {
        Ok(report) => {
            print!("{}", report.render(format));
            if let Some(problem) = report.internal_error() {
                eprintln!("internal disagreement: {problem}");
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
