//! `keli`: one subcommand per pipeline stage, with file handoffs between them.
//!
//! Exit codes: 0 on success, 2 when a computation or verification fails,
//! 1 on usage errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "keli", version, about = "High-precision Keiper-Li coefficients and the zeros of their entire extension")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true, env = "KELI_THREADS")]
    pub threads: Option<usize>,
    /// Output format for tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the table here instead of stdout.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
}

/// Where the `λ` evaluator gets its node values.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Node cache written by `keli nodes`; computed on the fly when absent.
    #[arg(long)]
    pub nodes: Option<PathBuf>,
    /// Working digits of λ evaluation and Newton steps; defaults to the node digits.
    #[arg(long)]
    pub digits: Option<u32>,
    /// Digits of the node values and α_k; defaults to the cache's digits,
    /// or the larger of --digits and 600 when building nodes on the fly.
    #[arg(long)]
    pub node_digits: Option<u32>,
    /// Number of `α_k` to use; defaults to the node count, or 60.
    #[arg(long)]
    pub k_max: Option<usize>,
    /// Target digits for truncated sums.
    #[arg(long, default_value_t = 30)]
    pub target: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate f(j/(j+1)) and write the node cache.
    Nodes {
        #[arg(long, default_value_t = 60)]
        count: usize,
        #[arg(long, default_value_t = 600)]
        digits: u32,
    },
    /// Interpolation coefficients α_k with their significance.
    Alphas {
        #[command(flatten)]
        source: Source,
    },
    /// Even Taylor coefficients ν_q of λ(s).
    Nu {
        #[command(flatten)]
        source: Source,
        /// Largest even order.
        #[arg(long, default_value_t = 40)]
        q_max: usize,
    },
    /// λ_n for integer n.
    Lambda {
        #[command(flatten)]
        source: Source,
        /// Range `a..b` (inclusive) or a single n.
        #[arg(long, default_value = "1..20")]
        n: String,
    },
    /// λ(s) at complex points.
    Eval {
        #[command(flatten)]
        source: Source,
        /// Points as `re` or `re,im`; repeatable.
        #[arg(long = "s", required = true)]
        points: Vec<String>,
        /// Also report λ'(s).
        #[arg(long)]
        derivative: bool,
        /// Sum the ν power series instead of the β/α series.
        #[arg(long)]
        series: bool,
    },
    /// Zeros σ_k of λ(s) by Newton iteration from automatic seeds.
    Zeros {
        #[command(flatten)]
        source: Source,
        /// Range `a..b` of zero indices.
        #[arg(long, default_value = "1..2")]
        k: String,
        /// Newton stopping threshold on |λ(σ)|.
        #[arg(long, default_value = "1e-30")]
        tol: String,
    },
    /// Recompute zeros and compare them with a fixture table.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Fixture CSV `k,re,im`; the shipped table when absent.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, default_value = "1..2")]
        k: String,
        #[arg(long, default_value = "1e-30")]
        tol: String,
        /// Only check that the node cache parses and spot-recompute entries.
        #[arg(long)]
        cache_only: bool,
    },
    /// Partial Weierstrass product over tabulated zeros.
    Product {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Point `re` or `re,im`.
        #[arg(long = "s", default_value = "0.5")]
        point: String,
        /// Number of quartic factors; all rows when absent.
        #[arg(long)]
        count: Option<usize>,
        /// Leading constant; ν_2 from the evaluator when absent.
        #[arg(long)]
        constant: Option<String>,
    },
    /// Least-squares factor c in Im σ_k ≈ c ln Re σ_k.
    Fit {
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        k_min: usize,
        /// Emit (Re σ, exp(Im σ / 16)) rows instead.
        #[arg(long)]
        rescale: bool,
    },
    /// High-order finite differences of the zero sequence.
    Fdiff {
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, default_value_t = 700)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        stride: usize,
        #[arg(long, default_value_t = 0)]
        offset: usize,
        #[arg(long, value_enum, default_value_t = Norm::None)]
        normalize: Norm,
        /// Radius of a uniform random perturbation added to every zero.
        #[arg(long)]
        perturb: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Zero sums with one zeta zero moved off the critical line.
    Rhsim {
        /// Ordinates file; the bundled 100 ordinates when absent.
        #[arg(long)]
        gammas: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long, default_value = "0.25")]
        delta: String,
        #[arg(long, default_value_t = 5000)]
        n_max: u64,
        #[arg(long, default_value_t = 40)]
        digits: u32,
        /// Emit every value instead of the first negative n.
        #[arg(long)]
        values: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Norm {
    None,
    Pow2,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error\tusage\tcannot set up {n} threads: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli, &argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.line());
            e.code()
        }
    }
}
