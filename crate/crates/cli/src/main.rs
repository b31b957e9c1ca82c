//! Command-line driver: reads a PACE `.gr` instance, computes an optimal
//! treedepth decomposition, and writes the `.tree` certificate to standard
//! output. Exit codes: 0 solved and certified, 1 input error, 2 budget
//! abort (a valid but possibly suboptimal certificate is still emitted).

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use treedepth::preprocess::{lift_decomposition, preprocess};
use treedepth::solver::{solve_with, verify, Decomposition, SolveConfig, SolveStats};
use treedepth::upper_bound::compute_upper_bound;
use treedepth::{emit_tree, parse_gr, Graph, DEFAULT_SEPARATOR_BUDGET};

#[derive(Parser)]
#[command(name = "treedepth", version, about)]
struct Args {
    /// Input instance in .gr format; standard input when omitted
    input: Option<PathBuf>,

    /// Re-check the certificate before emitting (default)
    #[arg(long, overrides_with = "no_verify")]
    verify: bool,

    /// Skip the final certificate re-check
    #[arg(long)]
    no_verify: bool,

    /// Emit the heuristic upper bound without optimality certification
    #[arg(long)]
    ub_only: bool,

    /// Disable the treedepth-preserving reductions
    #[arg(long)]
    no_preprocess: bool,

    /// Cap on the family size of a single separator enumeration
    #[arg(long, value_name = "N", default_value_t = DEFAULT_SEPARATOR_BUDGET)]
    budget: usize,

    /// Reserved; the pipeline is deterministic and ignores it
    #[arg(long, value_name = "S", default_value_t = 0)]
    seed: u64,

    /// Print machine-readable counters to standard error
    #[arg(long)]
    stats: bool,
}

const SOLVER_STACK: usize = 512 << 20;

fn read_input(path: &Option<PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

struct Run {
    decomposition: Decomposition,
    certified: bool,
    stats: SolveStats,
}

fn run_solver(g: &Graph, cfg: &SolveConfig, ub_only: bool) -> Run {
    if ub_only {
        let (reduced, trace) = if cfg.preprocess {
            preprocess(g)
        } else {
            (g.clone(), Default::default())
        };
        let (_, dec) = compute_upper_bound(&reduced);
        let lifted = lift_decomposition(&trace, &dec).expect("upper bound certificate must lift");
        Run {
            decomposition: lifted,
            certified: true,
            stats: SolveStats::default(),
        }
    } else {
        let out = solve_with(g, cfg);
        Run {
            decomposition: out.decomposition,
            certified: out.certified,
            stats: out.stats,
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match read_input(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(1);
        }
    };
    let instance = match parse_gr(&text) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let graph = instance.graph();
    let cfg = SolveConfig {
        preprocess: !args.no_preprocess,
        separator_budget: args.budget,
        seed: args.seed,
    };
    let ub_only = args.ub_only;

    let run = std::thread::Builder::new()
        .stack_size(SOLVER_STACK)
        .spawn(move || run_solver(&graph, &cfg, ub_only))
        .expect("spawn solver thread")
        .join()
        .expect("solver thread panicked");

    if !args.no_verify {
        let graph = instance.graph();
        if !verify(&graph, &run.decomposition) {
            eprintln!("error: internal verification failed, refusing to emit");
            return ExitCode::from(3);
        }
    }
    print!("{}", emit_tree(&run.decomposition));

    if args.stats {
        let s = &run.stats;
        eprintln!("nodes_expanded={}", s.nodes_expanded);
        eprintln!("separators_enumerated={}", s.separators_enumerated);
        eprintln!("cache_hits={}", s.cache_hits);
        eprintln!("cache_misses={}", s.cache_misses);
        eprintln!("iso_transfers={}", s.iso_transfers);
    }
    if run.certified {
        ExitCode::SUCCESS
    } else {
        eprintln!(
            "warning: separator budget exhausted; emitted the best verified upper bound without an optimality certificate"
        );
        ExitCode::from(2)
    }
}
