use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use syzlab::checks::DEFAULT_MAX_POINTS;
use syzlab::koszul::DEFAULT_BUDGET;
use syzlab_cli::config::{Command, RunConfig};
use syzlab_cli::{render_text, run};

#[derive(Parser)]
#[command(
    name = "syzlab",
    version,
    about = "Syzygies of curves on toric surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum Cmd {
    /// Genus, lattice widths, boundary counts and hypothesis flags.
    Analyze { input: PathBuf },
    /// Surface rows b and c.
    BettiSurface { input: PathBuf },
    /// Curve row a with the surface rows and induced ranks.
    BettiCurve { input: PathBuf },
    /// Curve Betti table plus every predicate; exit 1 if any fails.
    Verify { input: PathBuf },
    /// Normal fan and its minimal resolution.
    Resolve { input: PathBuf },
    /// Scans interior polygons with few lattice points.
    Enumerate {
        #[arg(long, default_value_t = DEFAULT_MAX_POINTS)]
        max_points: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Print the JSON report.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    /// Comma-separated primes.
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest admissible matrix size, in cells.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, global = true, env = "SYZLAB_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Explicit curve equation, e.g. "x^6+y^2+x^2*y^6".
    #[arg(long, global = true)]
    f: Option<String>,
    /// Sample only the boundary coefficients of f.
    #[arg(long, global = true)]
    boundary_only: bool,
    /// Rank backend: blocked, sparse or dense.
    #[arg(long, global = true, default_value = "blocked")]
    backend: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, input, max_points) = match cli.command {
        Cmd::Analyze { input } => (Command::Analyze, Some(input), None),
        Cmd::BettiSurface { input } => (Command::BettiSurface, Some(input), None),
        Cmd::BettiCurve { input } => (Command::BettiCurve, Some(input), None),
        Cmd::Verify { input } => (Command::Verify, Some(input), None),
        Cmd::Resolve { input } => (Command::Resolve, Some(input), None),
        Cmd::Enumerate { max_points } => (Command::Enumerate, None, Some(max_points)),
    };
    let c = cli.common;
    let mut cfg = RunConfig::new(command);
    cfg.input = input;
    cfg.seed = c.seed;
    cfg.trials = c.trials;
    if let Some(p) = c.primes {
        cfg.primes = p;
    }
    cfg.jobs = c.jobs;
    cfg.json = c.json;
    cfg.cache_dir = c.cache_dir;
    cfg.budget = c.budget;
    cfg.f = c.f;
    cfg.boundary_only = c.boundary_only;
    cfg.backend = c.backend;
    if let Some(m) = max_points {
        cfg.max_points = m;
    }

    let outcome = run(&cfg);
    if outcome.cache_hit {
        eprintln!("cache: hit");
    }
    for d in &outcome.diagnostics {
        eprintln!("{d}");
    }
    if let Some(report) = &outcome.report {
        if cfg.json {
            print!("{report}");
        } else {
            print!("{}", render_text(report));
        }
    }
    ExitCode::from(outcome.status.code() as u8)
}
