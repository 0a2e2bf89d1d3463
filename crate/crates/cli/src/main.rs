//! `inertia` — stream graph6 corpora through exact spectral-inertia checks.

use clap::{Args, Parser, Subcommand, ValueEnum};
use inertia_cli::emit::{EmitFormat, Emitter};
use inertia_cli::{
    run_construct, run_enumerate, run_fixtures, run_sample, run_scan, RunConfig,
    DEFAULT_EXACT_LIMIT, ENUMERATE_MAX_ORDER,
};
use inertia_core::checks::{CheckId, Limits, DEFAULT_CYCLE_CAP};
use inertia_core::format::write_graph6;
use inertia_core::graph::DEFAULT_MAX_ORDER;
use inertia_core::reduction::DEFAULT_ISO_LIMIT;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "inertia",
    about = "Exact adjacency-spectrum inertia checks over graph6 corpora",
    long_about = "Computes exact graph inertia (n+, n0, n-) and evaluates a registry of \
                  spectral inequalities with holds / tight / violated verdicts. Reports \
                  stream to stdout as JSONL or CSV; diagnostics go to stderr. Exit status: \
                  0 all checks hold, 2 a conjectured bound was violated (a discovery), \
                  1 operational error or a proven theorem reported violated (a bug)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Jsonl,
    Csv,
}

#[derive(Args)]
struct CommonOpts {
    /// Comma-separated check ids, or "all": main, signature_form, weaker,
    /// torgasev, mohammadian_order, rank_order, ma_yang_li, line_graph,
    /// energy, tree_laplacian, cograph_inertia, self_complementary,
    /// absolute_bound
    #[arg(long, default_value = "all", value_parser = parse_checks)]
    checks: CheckVec,
    /// Report format on stdout
    #[arg(long, value_enum, default_value_t = EmitArg::Jsonl)]
    emit: EmitArg,
    /// Worker threads (default: INERTIA_JOBS or the available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    /// Include wall-clock timings in records (off by default so identical
    /// runs are bitwise identical)
    #[arg(long)]
    timings: bool,
    /// Order threshold for mandatory exact arithmetic
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
    /// Allow the float path (flagged "approximate") above the exact limit
    #[arg(long)]
    allow_approx: bool,
    /// Order cap for exhaustive cycle enumeration
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
    cycle_cap: usize,
    /// Order cap for the self-complementarity isomorphism search
    #[arg(long, default_value_t = DEFAULT_ISO_LIMIT)]
    iso_limit: usize,
}

#[derive(Clone)]
struct CheckVec(Vec<CheckId>);

fn parse_checks(s: &str) -> Result<CheckVec, String> {
    if s == "all" {
        return Ok(CheckVec(CheckId::SELECTABLE.to_vec()));
    }
    let mut out = Vec::new();
    for token in s.split(',') {
        let id = CheckId::parse(token.trim()).map_err(|e| e.to_string())?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(CheckVec(out))
}

impl CommonOpts {
    fn config(&self, fail_fast: bool, max_order: usize) -> RunConfig {
        let jobs = self
            .jobs
            .or_else(|| {
                std::env::var("INERTIA_JOBS")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or_else(|| {
                std::thread::available_parallelism()
                    .map(usize::from)
                    .unwrap_or(1)
            })
            .max(1);
        RunConfig {
            checks: self.checks.0.clone(),
            jobs,
            limits: Limits {
                cycle_cap: self.cycle_cap,
                iso_limit: self.iso_limit,
            },
            max_order,
            exact_limit: self.exact_limit,
            allow_approx: self.allow_approx,
            fail_fast,
        }
    }

    fn format(&self) -> EmitFormat {
        match self.emit {
            EmitArg::Jsonl => EmitFormat::Jsonl,
            EmitArg::Csv => EmitFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every graph6/sparse6 line of a file (or stdin with "-")
    Scan {
        /// Input path, or "-" for standard input
        #[arg(default_value = "-")]
        input: String,
        /// Stop at the first violation or input error
        #[arg(long)]
        fail_fast: bool,
        /// Maximum accepted graph order
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Exhaustively check all labeled graphs of order 1..=N
    Enumerate {
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Emit only the final summary, not per-graph records
        #[arg(long)]
        quiet: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Check seeded Erdős–Rényi G(n, 1/2) samples
    Sample {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Build a graph from a family and transform chain, emit graph6
    ///
    /// Example: "complete 2 | kl_double | kl_double". Families: path n,
    /// cycle n, complete n, complete_bipartite p q, complete_multipartite
    /// p1 p2 ..., star k, triangular k, paley q, petersen, h1, h2, empty n.
    /// Transforms: complement, line_graph, kl_double, reduce,
    /// add_twin v [open|closed], join/union/tensor <family>.
    Construct {
        /// Pipeline like "cycle 5 | line_graph"
        spec: Vec<String>,
    },
    /// Run the shipped fixture catalogue (spectrum table + buildable
    /// graphs) and assert the catalogued tight cases
    Fixtures {
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn exit_of(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn run(cli: Cli) -> io::Result<ExitCode> {
    let stdout = io::stdout();
    let stderr = io::stderr();
    match cli.command {
        Command::Scan {
            input,
            fail_fast,
            max_order,
            common,
        } => {
            let cfg = common.config(fail_fast, max_order);
            let mut emitter = Emitter::new(
                BufWriter::new(stdout.lock()),
                common.format(),
                common.timings,
            );
            let mut diag = stderr.lock();
            let outcome = if input == "-" {
                run_scan(BufReader::new(io::stdin()), &cfg, &mut emitter, &mut diag)?
            } else {
                let file = File::open(PathBuf::from(&input))?;
                run_scan(BufReader::new(file), &cfg, &mut emitter, &mut diag)?
            };
            Ok(exit_of(outcome.exit_code()))
        }
        Command::Enumerate {
            max_order,
            quiet,
            common,
        } => {
            if max_order > ENUMERATE_MAX_ORDER {
                eprintln!("error: enumerate supports max-order <= {ENUMERATE_MAX_ORDER}");
                return Ok(exit_of(1));
            }
            let cfg = common.config(false, DEFAULT_MAX_ORDER);
            let mut emitter = Emitter::new(
                BufWriter::new(stdout.lock()),
                common.format(),
                common.timings,
            );
            let mut diag = stderr.lock();
            let (outcome, _) = run_enumerate(max_order, &cfg, &mut emitter, quiet, &mut diag)?;
            Ok(exit_of(outcome.exit_code()))
        }
        Command::Sample {
            order,
            count,
            seed,
            common,
        } => {
            let cfg = common.config(false, DEFAULT_MAX_ORDER);
            if order > cfg.max_order {
                eprintln!("error: order {order} above max order {}", cfg.max_order);
                return Ok(exit_of(1));
            }
            if count == 0 {
                eprintln!("error: count must be at least 1");
                return Ok(exit_of(1));
            }
            if order > cfg.exact_limit && !cfg.allow_approx {
                eprintln!(
                    "error: order {order} above exact limit {}; rerun with --allow-approx",
                    cfg.exact_limit
                );
                return Ok(exit_of(1));
            }
            let mut emitter = Emitter::new(
                BufWriter::new(stdout.lock()),
                common.format(),
                common.timings,
            );
            let mut diag = stderr.lock();
            let (outcome, _) = run_sample(order, count, seed, &cfg, &mut emitter, &mut diag)?;
            Ok(exit_of(outcome.exit_code()))
        }
        Command::Construct { spec } => {
            let spec = spec.join(" ");
            match run_construct(&spec) {
                Ok(g) => {
                    let mut out = stdout.lock();
                    writeln!(out, "{}", write_graph6(&g).map_err(io::Error::other)?)?;
                    Ok(exit_of(0))
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(exit_of(1))
                }
            }
        }
        Command::Fixtures { common } => {
            let cfg = common.config(false, DEFAULT_MAX_ORDER);
            let mut emitter = Emitter::new(
                BufWriter::new(stdout.lock()),
                common.format(),
                common.timings,
            );
            let mut diag = stderr.lock();
            let outcome = run_fixtures(&cfg, &mut emitter, &mut diag)?;
            Ok(exit_of(outcome.exit_code()))
        }
    }
}
