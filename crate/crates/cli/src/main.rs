//! `zdmetric`: zero-divisor graphs of Z_n, barycentric subdivisions, and
//! exact (fault-tolerant) metric dimension.
//!
//! Exit codes: 0 success/Exact, 2 input error, 3 timeout or incomplete under
//! `--strict`, 4 a finished computation refutes a known value.

mod cmd;
mod formats;

use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand};
use cmd::{Format, Kind, StrategyArg};
use zdmetric::SearchLimits;

#[derive(Parser)]
#[command(name = "zdmetric", version, about)]
struct Cli {
    /// Worker threads for BFS and sweep pools (0 = all cores). The solver
    /// search is single-threaded either way, so results do not depend on
    /// this; 1 additionally serializes construction.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct LimitArgs {
    /// Node budget for the branch-and-bound search.
    #[arg(long = "limits-nodes", default_value_t = 100_000_000)]
    limits_nodes: u64,
    /// Wall-clock budget per solve, in milliseconds.
    #[arg(long = "limits-ms", default_value_t = 60_000)]
    limits_ms: u64,
}

impl LimitArgs {
    fn to_limits(&self) -> SearchLimits {
        SearchLimits {
            max_nodes: Some(self.limits_nodes),
            max_time: Some(Duration::from_millis(self.limits_ms)),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct the zero-divisor graph Γ(Z_n) and export it.
    Gamma {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Barycentric subdivision of Γ(Z_pq), with canonical part labels.
    Subdivide {
        /// Product of two distinct odd primes.
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact dim or fdim of BS(Γ(Z_n)) (n = pq) or of an edge-list graph.
    Solve {
        /// Product of two distinct odd primes; solves the subdivision.
        #[arg(long, conflicts_with = "edges")]
        n: Option<u64>,
        /// Graph file: an edge list ("u v" or "u,v" lines, '#' comments) or
        /// a JSON document previously exported by gamma/subdivide.
        #[arg(long)]
        edges: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value = "bb")]
        strategy: StrategyArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Metric-code table (CSV) of BS(Γ(Z_n)) against a landmark list.
    Codes {
        /// Product of two distinct odd primes.
        #[arg(long)]
        n: u64,
        /// Comma-separated part labels (e.g. "r1,t1_2"), or "paper-E" for
        /// the reference family in its listed order.
        #[arg(long)]
        landmarks: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the known dim/fdim values and landmark family at one (p, q).
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        limits: LimitArgs,
        /// Refuse bound-consistent outcomes; demand exact confirmation.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify across inclusive prime ranges (e.g. --p 3..7 --q 5..13); CSV.
    Sweep {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random-corpus self-checks: solver vs brute force, path
    /// characterization, predicate agreement.
    Selftest {
        #[arg(long, default_value_t = 0xc0ffee)]
        seed: u64,
        /// Number of random graphs in the oracle-equivalence pass.
        #[arg(long, default_value_t = 300)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .ok();
    }
    match cli.command {
        Command::Gamma { n, format, out } => cmd::gamma(n, format, &out),
        Command::Subdivide { n, format, out } => cmd::subdivide(n, format, &out),
        Command::Solve {
            n,
            edges,
            kind,
            limits,
            strategy,
            out,
        } => cmd::solve(&cmd::SolveArgs {
            n,
            edges,
            kind,
            limits: limits.to_limits(),
            strategy,
            out,
        }),
        Command::Codes { n, landmarks, out } => cmd::codes(n, &landmarks, &out),
        Command::Verify {
            p,
            q,
            limits,
            strict,
            out,
        } => cmd::verify(p, q, limits.to_limits(), strict, &out),
        Command::Sweep {
            p,
            q,
            limits,
            strict,
            out,
        } => cmd::sweep(&p, &q, limits.to_limits(), strict, &out),
        Command::Selftest { seed, count, out } => cmd::selftest(seed, count, &out),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}
