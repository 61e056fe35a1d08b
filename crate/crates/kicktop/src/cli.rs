//! Command-line interface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{self, classical::Mode};
use crate::config::{KappaGrid, OutputFormat, RunConfig, StateName, TomoConfig};
use crate::criteria::{Fault, Options};
use crate::error::{AppError, AppResult};

#[derive(Debug, Parser)]
#[command(name = "kicktop", version, about = "Entanglement dynamics of the quantum kicked top")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,

    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by all subcommands; each overrides the matching config key.
#[derive(Debug, Args)]
pub struct CommonArgs {
    /// TOML run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Number of qubits, 2j.
    #[arg(long = "two-j", global = true)]
    pub two_j: Option<u32>,
    /// Torsion strength: a value or a range start:stop:step.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub kappa0: Option<KappaGrid>,
    /// Rotation angle per kick (default pi/2).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub p: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub theta0: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub phi0: Option<f64>,
    /// Named initial state, instead of theta0/phi0.
    #[arg(long, global = true, value_enum)]
    pub state: Option<StateName>,
    /// Number of kicks.
    #[arg(long, global = true)]
    pub horizon: Option<u64>,
    #[arg(long = "n-theta", global = true)]
    pub n_theta: Option<usize>,
    #[arg(long = "n-phi", global = true)]
    pub n_phi: Option<usize>,
    /// Comma-separated kick counts.
    #[arg(long, global = true, value_delimiter = ',')]
    pub times: Option<Vec<u64>>,
    #[arg(long, global = true)]
    pub samples: Option<u64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output file (a directory for husimi); stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy and concurrence step by step, with closed forms where known.
    Evolve,
    /// Long-time average entropy over a range of kappa0.
    Scan {
        /// Divide by the random-state baseline.
        #[arg(long)]
        normalize: bool,
    },
    /// Long-time average entropy over the sphere of initial states.
    Surface,
    /// Husimi distributions at the requested times.
    Husimi,
    /// Four-qubit tunneling report.
    Tunnel,
    /// Classical map: orbits, fixed-point stability, Lyapunov exponents.
    Classical {
        #[arg(long, value_enum, default_value = "orbit")]
        mode: Mode,
    },
    /// Random symmetric-state entanglement baseline.
    Rmt,
    /// Three-qubit state tomography.
    Tomo {
        /// Measured populations (CSV).
        #[arg(long, required_unless_present = "simulate", conflicts_with = "simulate")]
        input: Option<PathBuf>,
        /// Write synthetic populations for the target instead of reconstructing.
        #[arg(long)]
        simulate: bool,
        /// zero, ghz, w or kicked.
        #[arg(long)]
        target: Option<String>,
        /// Kick count for the `kicked` target.
        #[arg(long)]
        step: Option<u64>,
    },
    /// Run the acceptance checks; exits with status 2 if any fails.
    Verify {
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
}

impl CommonArgs {
    fn overrides(&self) -> RunConfig {
        RunConfig {
            two_j: self.two_j,
            kappa0: self.kappa0,
            p: self.p,
            theta0: self.theta0,
            phi0: self.phi0,
            state: self.state,
            horizon: self.horizon,
            n_theta: self.n_theta,
            n_phi: self.n_phi,
            times: self.times.clone(),
            samples: self.samples,
            seed: self.seed,
            out: self.out.clone(),
            format: self.format,
            tomo: None::<TomoConfig>,
        }
    }
}

pub fn run(cli: Cli) -> AppResult<()> {
    let base = match &cli.common.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    let cfg = base.merge(cli.common.overrides());
    commands::init_threads(cli.common.threads);
    match cli.command {
        Command::Evolve => commands::evolve::run(&cfg),
        Command::Scan { normalize } => commands::scan::run(&cfg, normalize),
        Command::Surface => commands::surface::run(&cfg),
        Command::Husimi => {
            for path in commands::husimi::run(&cfg)? {
                log::info!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Tunnel => commands::tunnel::run(&cfg),
        Command::Classical { mode } => commands::classical::run(&cfg, mode),
        Command::Rmt => commands::rmt::run(&cfg),
        Command::Tomo { input, simulate, target, step } => {
            if simulate {
                commands::tomo::simulate(&cfg, target.as_deref(), step, cfg.out.as_deref())
            } else {
                let input = input.ok_or_else(|| AppError::Validation("tomo needs --input or --simulate".into()))?;
                let report = commands::tomo::reconstruct(&cfg, &input, target.as_deref(), step)?;
                crate::output::write_json(&report, cfg.out.as_deref())
            }
        }
        Command::Verify { inject_fault } => commands::verify::run(&Options { fault: inject_fault }, cfg.out.as_deref()),
    }
}
