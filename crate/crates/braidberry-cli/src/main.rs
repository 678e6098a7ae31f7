//! Command-line front end: verification suites, entanglement and Berry
//! sweeps, spectra, and the block decomposition, with CSV/JSON output.

mod output;
mod sweeps;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser)]
#[command(
    name = "braidberry",
    about = "Numerical checks and sweeps for a 9x9 two-qutrit braiding system",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write the table here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override every tolerance (default: per-check, or BRAIDBERRY_TOL)
    #[arg(long)]
    tol: Option<f64>,
}

impl OutputOpts {
    /// Tolerance resolution: --tol flag, then BRAIDBERRY_TOL, then the
    /// per-check default.
    fn tolerance(&self, default: f64) -> f64 {
        if let Some(t) = self.tol {
            return t;
        }
        if let Ok(env) = std::env::var("BRAIDBERRY_TOL") {
            if let Ok(t) = env.parse::<f64>() {
                return t;
            }
        }
        default
    }
}

#[derive(Args, Debug)]
struct AngleOpts {
    /// Interpret input angles as degrees
    #[arg(long)]
    degrees: bool,
}

impl AngleOpts {
    fn to_radians(&self, v: f64) -> f64 {
        if self.degrees {
            v.to_radians()
        } else {
            v
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the seeded verification suites (Hecke, Yang-Baxter, unitarity,
    /// gauge, SU(3)/SU(2) algebra, Casimir spectra)
    Verify(VerifyArgs),
    /// Sweep negativity over theta, numeric vs closed form
    Entangle(EntangleArgs),
    /// Berry phases per subsystem and band, numeric vs closed form
    Berry(BerryArgs),
    /// Subsystem eigenvalues, numeric vs closed form
    Spectrum(SpectrumArgs),
    /// Orthogonal block decomposition at phi1 = phi2
    Decompose(DecomposeArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Samples per randomized suite
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// RNG seed for the randomized suites
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Perturb the named check's operator to demonstrate sensitivity
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args, Debug)]
struct EntangleArgs {
    /// Single theta (radians unless --degrees)
    #[arg(long)]
    theta: Option<f64>,
    /// Theta grid as start:stop:count
    #[arg(long, value_name = "START:STOP:COUNT")]
    theta_grid: Option<String>,
    /// Emit one row per basis column instead of column 0 only
    #[arg(long)]
    per_basis: bool,
    #[command(flatten)]
    angles: AngleOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args, Debug)]
struct BerryArgs {
    /// Fixed spectral angle theta (radians unless --degrees)
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
    theta: f64,
    #[arg(long, default_value_t = 1)]
    n1: i64,
    #[arg(long, default_value_t = 1)]
    n2: i64,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Time steps for the discrete overlap product
    #[arg(long, default_value_t = 4096)]
    steps: usize,
    /// Preset drive pairs: 1 -> (1,1), 2 -> (-1,1), 3 -> (2,1), 4 -> (-2,1)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    example: Option<u8>,
    #[command(flatten)]
    angles: AngleOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_3)]
    theta: f64,
    #[arg(long, default_value_t = 1)]
    n1: i64,
    #[arg(long, default_value_t = 1)]
    n2: i64,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Evaluation time
    #[arg(long, default_value_t = 0.0)]
    t: f64,
    #[command(flatten)]
    angles: AngleOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
    theta: f64,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Evaluation time
    #[arg(long, default_value_t = 0.0)]
    t: f64,
    #[command(flatten)]
    angles: AngleOpts,
    #[command(flatten)]
    output: OutputOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Cmd::Verify(args) => verify::run(&args),
        Cmd::Entangle(args) => sweeps::entangle(&args),
        Cmd::Berry(args) => sweeps::berry(&args),
        Cmd::Spectrum(args) => sweeps::spectrum(&args),
        Cmd::Decompose(args) => sweeps::decompose(&args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Parse "start:stop:count" into an inclusive linear grid.
fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be start:stop:count (got '{spec}')"));
    }
    let start: f64 = parts[0].parse().map_err(|_| format!("bad grid start '{}'", parts[0]))?;
    let stop: f64 = parts[1].parse().map_err(|_| format!("bad grid stop '{}'", parts[1]))?;
    let count: usize = parts[2].parse().map_err(|_| format!("bad grid count '{}'", parts[2]))?;
    if count == 0 {
        return Err("grid count must be at least 1".into());
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    Ok((0..count)
        .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
        .collect())
}
