use clap::{Parser, Subcommand};
use std::collections::BTreeSet;
use std::process::ExitCode;
use treepoly::scanner::{Check, ScanConfig};
use treepoly_cli::*;

#[derive(Parser)]
#[command(
    name = "treepoly",
    about = "Exact spanning-tree polynomials of Eulerian digraphs and link state models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the polynomial P_D(t) of an Eulerian digraph file.
    Poly {
        /// Digraph file (v/e/rot lines).
        file: String,
        /// Pipeline: direct | det | incl-excl | all (all asserts agreement).
        #[arg(long, default_value = "all")]
        method: String,
        /// Root vertex for the tree-based pipelines.
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build the special alternating link of a bipartite plane graph and
    /// evaluate both state models against the dual dimap polynomial.
    States {
        /// Bipartite file (v/e/color/rot lines; rot is mandatory).
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the spanning-tree/arborescence bijection table with weights
    /// and verify the weight relation and supporting lemmas.
    Bijection {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the full identity suite on one Eulerian digraph.
    Verify {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Generate Eulerian digraphs and scan the conjectured coefficient
    /// properties for counterexamples.
    Scan {
        /// Vertex count or range, e.g. 4 or 3..6.
        #[arg(long, default_value = "3..5")]
        n: String,
        /// Edge count or range.
        #[arg(long, default_value = "3..10")]
        m: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of: log-concave, trapezoidal,
        /// ultra-log-concave, palindromic (aliases lc, trap, ulc, palin).
        #[arg(long)]
        checks: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Pair every generated edge with its reversal.
        #[arg(long)]
        symmetric: bool,
        /// Prepend the exhaustive corpus of all Eulerian digraphs with
        /// at most 4 vertices and 8 edges.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
}

fn run() -> Result<Outcome, treepoly::Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Poly {
            file,
            method,
            root,
            json,
        } => {
            let text = read(&file)?;
            cmd_poly(&text, PolyMethod::parse(&method)?, root, json)
        }
        Command::States { file, json } => cmd_states(&read(&file)?, json),
        Command::Bijection { file, json } => cmd_bijection(&read(&file)?, json),
        Command::Verify { file, json } => cmd_verify(&read(&file)?, json),
        Command::Scan {
            n,
            m,
            count,
            seed,
            checks,
            jobs,
            symmetric,
            exhaustive,
            json,
        } => {
            let checks = match checks {
                None => Check::all(),
                Some(list) => {
                    let mut set = BTreeSet::new();
                    for tok in list.split(',') {
                        set.insert(Check::parse(tok.trim())?);
                    }
                    set
                }
            };
            let cfg = ScanConfig {
                n_range: parse_range(&n)?,
                m_range: parse_range(&m)?,
                count,
                seed,
                checks,
                jobs,
                symmetric,
                exhaustive_small: exhaustive,
            };
            cmd_scan(&cfg, json)
        }
    }
}

fn read(path: &str) -> Result<String, treepoly::Error> {
    std::fs::read_to_string(path)
        .map_err(|e| treepoly::Error::Input(format!("cannot read {path}: {e}")))
}

fn main() -> ExitCode {
    match run() {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err) as u8)
        }
    }
}
