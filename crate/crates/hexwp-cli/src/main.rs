mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::Failure;

#[derive(Debug, Parser)]
#[command(
    name = "hexwp",
    version,
    about = "Arc-length Poisson geometry of bordered surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check a surface and report its topology and boundary walk.
    Validate,
    /// Dump s/b lengths, half-widths, spine angles, boundary lengths and foot positions.
    Geom,
    /// Print the Poisson matrix H.
    Poisson,
    /// Check that every boundary length is a Casimir.
    Casimir,
    /// Check the cyclic Jacobi identity on every arc triple.
    Jacobi,
    /// Tabulate the distance to the PL bivector along a = t·a0.
    LimitKontsevich,
    /// Check the duality between the decorated bivector and the Penner form.
    PennerDuality,
    /// Evaluate a twist scenario.
    Twist,
    /// Flip one arc and report the new triangulation and lengths.
    Flip,
    /// Flip negative-width arcs until all widths are non-negative.
    Spine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Surface document (JSON); defaults to the built-in one-holed torus.
    #[arg(long, global = true)]
    pub surface: Option<PathBuf>,
    /// Arc-length map {"arc id": value}; sampled from --seed when absent.
    #[arg(long, global = true)]
    pub lengths: Option<PathBuf>,
    /// λ-length map {"arc id": value}; sampled from --seed when absent.
    #[arg(long, global = true)]
    pub lambda: Option<PathBuf>,
    /// Twist scenario document (JSON).
    #[arg(long, global = true)]
    pub scenario: Option<PathBuf>,
    /// Tolerance for verification commands.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Relative finite-difference step.
    #[arg(long, global = true)]
    pub fd_step: Option<f64>,
    /// Comma-separated, strictly decreasing positive scale factors.
    #[arg(long, global = true, value_delimiter = ',')]
    pub t_list: Option<Vec<f64>>,
    /// Seed for sampled inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of sampled vectors when no input vector is given.
    #[arg(long, global = true, default_value_t = 1)]
    pub samples: usize,
    /// Arc to flip.
    #[arg(long, global = true)]
    pub arc: Option<usize>,
    /// Maximum number of flips in the spine search.
    #[arg(long, global = true)]
    pub max_flips: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match commands::run(cli.command, &cli.opts) {
        Ok(r) => r,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(Failure::Verification(e)) => {
            eprintln!("verification failed: {e}");
            return ExitCode::from(1);
        }
    };
    let text = match cli.opts.format {
        Format::Json => io::to_json(&report),
        Format::Csv => io::to_csv(&report),
    };
    match &cli.opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if let Some(v) = &report.verdict {
        if !v.pass {
            eprintln!(
                "verification failed: residual {:e} exceeds tolerance {:e}",
                v.residual, v.tol
            );
            return ExitCode::from(1);
        }
    }
    ExitCode::SUCCESS
}
