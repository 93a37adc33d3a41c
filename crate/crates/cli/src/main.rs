//! rmtlab: numerical experiments on the universal distributions of random
//! matrix theory.

mod commands;
mod config;

use clap::{Parser, Subcommand};
use config::{exit_code, RunConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rmtlab",
    version,
    about = "Tracy-Widom and Gaudin laws, Fredholm determinants, and Monte Carlo \
             universality experiments"
)]
struct Cli {
    /// RNG seed; default is a fixed constant so runs reproduce (RMT_SEED
    /// environment variable overrides the default, this flag overrides both).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads ("auto" = rayon default). Results are byte-identical
    /// for any setting.
    #[arg(long, global = true, default_value = "auto")]
    threads: String,

    /// Output directory for CSV/JSON artifacts.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,

    /// Optional key=value config file (seed and tolerance overrides).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a Tracy-Widom distribution (CSV: s, cdf, pdf).
    Tw {
        /// Symmetry index: 1, 2, or 4.
        #[arg(long)]
        beta: u32,
        /// Tabulation range lo:hi.
        #[arg(long, default_value = "-10:6", allow_hyphen_values = true)]
        range: String,
        /// Number of grid points (>= 100).
        #[arg(long, default_value_t = 500)]
        points: usize,
    },
    /// Fredholm determinant det(I - lambda K) on an interval union (JSON to
    /// stdout).
    Gap {
        /// Kernel: sine, airy, or hermite.
        #[arg(long)]
        kernel: String,
        /// Interval a:b; repeat for unions; use b = inf for a tail.
        #[arg(long = "interval", allow_hyphen_values = true)]
        intervals: Vec<String>,
        /// Deformation parameter lambda.
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Gauss-Legendre order per interval (doubled for the error estimate).
        #[arg(long, default_value_t = 60)]
        order: usize,
        /// Matrix size N for the hermite kernel.
        #[arg(long)]
        n: Option<usize>,
        /// Escalate the discretization estimate to an error when it exceeds
        /// the gap_tol tolerance (default 1e-8).
        #[arg(long)]
        strict: bool,
    },
    /// Monte Carlo experiments (samples CSV + summary JSON).
    Mc {
        /// One of: edge, wigner-edge, bulk, lis, evt.
        #[arg(long)]
        experiment: String,
        /// Matrix dimension / deck size / sample count per trial.
        #[arg(long)]
        size: usize,
        /// Number of draws.
        #[arg(long)]
        trials: usize,
        /// Entry law for evt: exponential, uniform01, pareto:<alpha>.
        #[arg(long)]
        law: Option<String>,
        /// Central spectrum fraction for bulk spacings.
        #[arg(long, default_value_t = 0.2)]
        window: f64,
    },
    /// Ingest a spectrum, unfold it, and compare spacings to a reference law.
    Spectra {
        /// Input file: one value per line, CSV, or an edge list with
        /// --adjacency.
        #[arg(long)]
        input: PathBuf,
        /// plain or csv:<column>.
        #[arg(long, default_value = "plain")]
        format: String,
        /// Treat the input as an undirected edge list.
        #[arg(long)]
        adjacency: bool,
        /// Vertex count for --adjacency.
        #[arg(long)]
        n_vertices: Option<usize>,
        /// local:<w>, poly:<d>, or zeta.
        #[arg(long, default_value = "local:9")]
        unfold: String,
        /// gaudin, goe-surmise, or poisson.
        #[arg(long, default_value = "gaudin")]
        reference: String,
        /// Minimum number of loaded values (0 disables the check).
        #[arg(long, default_value_t = 100)]
        min_count: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match RunConfig::resolve(
        cli.seed,
        &cli.threads,
        &cli.out,
        cli.config.as_deref(),
    ) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("rmtlab: {e}");
            return ExitCode::from(exit_code(&e) as u8);
        }
    };

    let result = match &cli.command {
        Command::Tw {
            beta,
            range,
            points,
        } => commands::tw::run(&config, *beta, range, *points),
        Command::Gap {
            kernel,
            intervals,
            lambda,
            order,
            n,
            strict,
        } => commands::gap::run(
            &config,
            &commands::gap::GapArgs {
                kernel,
                intervals,
                lambda: *lambda,
                order: *order,
                hermite_n: *n,
                strict: *strict,
            },
        ),
        Command::Mc {
            experiment,
            size,
            trials,
            law,
            window,
        } => commands::mc::run(
            &config,
            &commands::mc::McArgs {
                experiment,
                size: *size,
                trials: *trials,
                law: law.as_deref(),
                window: *window,
            },
        ),
        Command::Spectra {
            input,
            format,
            adjacency,
            n_vertices,
            unfold,
            reference,
            min_count,
        } => commands::spectra_cmd::run(
            &config,
            &commands::spectra_cmd::SpectraArgs {
                input,
                format,
                adjacency: *adjacency,
                n_vertices: *n_vertices,
                unfold,
                reference,
                min_count: *min_count,
            },
        ),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rmtlab: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
