use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mcv_cli::config::{Algorithm, BPolicyArg, OrderSpec, OutputFormat, RunConfig, YehPolicyArg};
use mcv_cli::corpus::{run_corpus, CorpusRun};
use mcv_cli::run::EXIT_INPUT;
use mcv_cli::{run, Outcome};
use mcv_core::oracle::CorpusSpec;

#[derive(Parser)]
#[command(name = "mcv", version, about = "Enumerate all minimal s-t cuts of an undirected graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the MCVs of one edge-list file.
    Run(RunArgs),
    /// Compare the corrected enumerator with the oracle on random graphs.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Edge-list file, one `a b` pair per line.
    input: PathBuf,
    /// Source label [default: s, if present]
    #[arg(long)]
    source: Option<String>,
    /// Sink label [default: t, if present]
    #[arg(long)]
    sink: Option<String>,
    #[arg(long, value_enum, default_value_t = Algorithm::Corrected)]
    algorithm: Algorithm,
    /// Transfer on a disconnected Step-2 test (yeh-original only).
    #[arg(long, value_enum)]
    yeh_policy: Option<YehPolicyArg>,
    /// ascending | script:A,B,.. | random:SEED | priority:A,B,..
    #[arg(long, default_value = "ascending")]
    order: OrderSpec,
    #[arg(long, value_enum, default_value_t = BPolicyArg::Scoped)]
    b_policy: BPolicyArg,
    /// Keep nodes that lie on no simple s-t path.
    #[arg(long)]
    no_prune: bool,
    /// Check the result against the brute-force oracle (exit 2 on mismatch).
    #[arg(long)]
    compare_oracle: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Print the cut of every MCV in text mode.
    #[arg(long)]
    emit_cuts: bool,
    /// Repeat the run with every non-source node as the sink.
    #[arg(long)]
    all_sinks: bool,
    /// Step budget for yeh-original [default: 10 * 2^n]
    #[arg(long)]
    step_limit: Option<u64>,
    /// Include the step-by-step trace.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    min_nodes: usize,
    #[arg(long, default_value_t = 10)]
    max_nodes: usize,
    #[arg(long, default_value_t = 0.35)]
    edge_probability: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    no_prune: bool,
    #[arg(long, value_enum, default_value_t = BPolicyArg::Scoped)]
    b_policy: BPolicyArg,
    /// Random selection orders per graph, in addition to ascending.
    #[arg(long, default_value_t = 3)]
    random_orders: usize,
    /// Directory for minimized counterexample edge lists.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

impl From<RunArgs> for RunConfig {
    fn from(a: RunArgs) -> Self {
        RunConfig {
            input_path: a.input,
            source: a.source,
            sink: a.sink,
            algorithm: a.algorithm,
            yeh_policy: a.yeh_policy,
            order: a.order,
            b_policy: a.b_policy,
            prune: !a.no_prune,
            compare_oracle: a.compare_oracle,
            output_format: a.format,
            emit_cuts: a.emit_cuts,
            all_sinks: a.all_sinks,
            step_limit: a.step_limit,
            trace: a.trace,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(&args.into()),
        Command::Corpus(a) => run_corpus(&CorpusRun {
            spec: CorpusSpec {
                graph_count: a.count,
                node_range: a.min_nodes..=a.max_nodes,
                edge_probability: a.edge_probability,
                seed: a.seed,
                prune: !a.no_prune,
            },
            b_policy: a.b_policy.into(),
            random_orders: a.random_orders,
            out_dir: a.out_dir,
        }),
    };
    match result {
        Ok(Outcome {
            exit_code,
            stdout,
            stderr,
        }) => {
            for line in stderr {
                eprintln!("{line}");
            }
            print!("{stdout}");
            ExitCode::from(exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
