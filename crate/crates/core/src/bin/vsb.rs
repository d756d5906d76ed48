use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vsb::extraction::{minimal_k_vsb, two_phase_3vsb, EdgeBudget, EdgeOrder, ExtractionError};
use vsb::generator::{generate_instance, InstanceSpec, DEFAULT_EDGE_MULTIPLIER};
use vsb::harness::{emit_table, run_experiment, ExperimentPlan, TableFormat};
use vsb::{is_k_vsb, parse_edge_list, serialize_edge_list, Digraph, Execution};

#[derive(Parser)]
#[command(
    name = "vsb",
    version,
    about = "Strong biconnectivity tools for directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random 3-vertex strongly biconnected instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Initial arcs per vertex before growth.
        #[arg(long, default_value_t = DEFAULT_EDGE_MULTIPLIER)]
        mult: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Test k-vertex strong biconnectivity (k = 1 is plain strong biconnectivity).
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
    },
    /// Extract a sparse 3-vertex strongly biconnected spanning subgraph.
    Minimize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = Order::Input)]
        order: Order,
        /// Shuffle seed for `--order shuffle`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run both algorithms on generated instances and print the result table.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        seeds_per_size: u64,
        #[arg(long, default_value_t = DEFAULT_EDGE_MULTIPLIER)]
        mult: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run rows concurrently (each algorithm run stays single-threaded).
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Minimal,
    TwoPhase,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Input,
    Shuffle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

/// Exit 1: predicate false or precondition failed. Exit 2: usage, I/O or
/// parse error.
enum Failure {
    Negative(String),
    Usage(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_graph(path: &Path) -> Result<Digraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { n, seed, mult, out } => {
            let spec = InstanceSpec::with_multiplier(n, mult, seed);
            let inst = generate_instance(spec).map_err(usage)?;
            write_file(&out, &serialize_edge_list(&inst.graph))?;
            println!("n={n}");
            println!("m0={}", spec.initial_edges);
            println!("grown={}", inst.edges_added_in_growth);
            println!("m={}", inst.graph.edge_count());
        }
        Command::Check { input, k } => {
            let g = read_graph(&input)?;
            let report = is_k_vsb(&g, k as usize).map_err(usage)?;
            match report.witness {
                None => println!("true"),
                Some(w) => {
                    println!("false");
                    return Err(Failure::Negative(w.to_string()));
                }
            }
        }
        Command::Minimize {
            input,
            algo,
            order,
            seed,
            out,
        } => {
            let g = read_graph(&input)?;
            let order = match order {
                Order::Input => EdgeOrder::Input,
                Order::Shuffle => EdgeOrder::Shuffled { seed },
            };
            let result = match algo {
                Algo::Minimal => minimal_k_vsb(&g, 3, order),
                Algo::TwoPhase => two_phase_3vsb(&g, order),
            }
            .map_err(|e| match e {
                ExtractionError::NotKVsb { .. } => Failure::Negative(e.to_string()),
                other => usage(other),
            })?;
            write_file(&out, &serialize_edge_list(&result.subgraph))?;
            let s = &result.stats;
            println!("edges_in={}", s.edges_in);
            println!("edges_out={}", s.edges_out);
            println!("tests_performed={}", s.tests_performed);
            println!("elapsed_ms={:.3}", s.elapsed.as_secs_f64() * 1e3);
            if matches!(algo, Algo::TwoPhase) {
                println!("protected={}", result.protected.len());
            }
            let budget = EdgeBudget::classify(g.vertex_count(), s.edges_out);
            if budget != EdgeBudget::Typical {
                eprintln!(
                    "warning: output has {} edges on {} vertices ({budget:?})",
                    s.edges_out,
                    g.vertex_count()
                );
            }
        }
        Command::Bench {
            sizes,
            seeds_per_size,
            mult,
            format,
            out,
            parallel,
        } => {
            let mut plan = ExperimentPlan::new(sizes, seeds_per_size);
            plan.multiplier = mult;
            if parallel {
                plan.execution = Execution::Parallel;
            }
            let outcomes = run_experiment(&plan).map_err(usage)?;
            let mut rows = Vec::with_capacity(outcomes.len());
            for outcome in outcomes {
                match outcome {
                    Ok(row) => {
                        for (name, m) in
                            [("minimal", row.algo1_edges), ("two-phase", row.algo2_edges)]
                        {
                            let budget = EdgeBudget::classify(row.n, m);
                            if budget != EdgeBudget::Typical {
                                eprintln!(
                                    "warning: n={} seed={} {name}: {m} edges ({budget:?})",
                                    row.n, row.seed
                                );
                            }
                        }
                        rows.push(row);
                    }
                    Err(e) => eprintln!("error: {e}"),
                }
            }
            let table = emit_table(
                &rows,
                match format {
                    Format::Csv => TableFormat::Csv,
                    Format::Md => TableFormat::Markdown,
                },
            );
            match out {
                Some(path) => write_file(&path, &table)?,
                None => print!("{table}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
