//! `noma-bler`: figure sweeps, a single-point design solve, and a self-check
//! battery for the NOMA HARQ block-error-rate toolkit.
//!
//! Exit codes: 0 success, 1 self-check failure, 2 input error, 3 sweep ran
//! but some points were flagged infeasible, 4 solver targets infeasible.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use noma_bler_cli::commands::{self, Overrides};

#[derive(Parser)]
#[command(name = "noma-bler", version, about = "Two-user downlink NOMA HARQ block-error-rate toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand; each overrides the matching config key.
#[derive(Args, Debug, Clone, Default)]
struct CommonArgs {
    /// JSON config file overlaying the built-in defaults.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Monte Carlo seed.
    #[arg(long, value_name = "U64")]
    seed: Option<u64>,
    /// Monte Carlo trial count.
    #[arg(long, value_name = "N")]
    trials: Option<u64>,
    /// Series node count.
    #[arg(long = "quad-n", value_name = "N")]
    quad_n: Option<usize>,
    /// Series inversion term count.
    #[arg(long = "quad-l", value_name = "L")]
    quad_l: Option<usize>,
    /// Gamma-inverse convention: regularized | literal.
    #[arg(long = "gamma-inverse", value_name = "MODE")]
    gamma_inverse: Option<String>,
}

impl From<&CommonArgs> for Overrides {
    fn from(a: &CommonArgs) -> Self {
        Overrides {
            config: a.config.clone(),
            seed: a.seed,
            trials: a.trials,
            quad_n: a.quad_n,
            quad_l: a.quad_l,
            gamma_inverse: a.gamma_inverse.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Per-round BLER versus SNR sweep (analytic and Monte Carlo columns).
    Figure1 {
        #[command(flatten)]
        common: CommonArgs,
        /// Output CSV path (standard output when omitted).
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// NOMA versus OMA BLER over the blocklength grid.
    Figure2 {
        #[command(flatten)]
        common: CommonArgs,
        /// Output CSV path (standard output when omitted).
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Required blocklength of the joint design versus the orthogonal
    /// baseline over the SNR grid.
    Figure3 {
        #[command(flatten)]
        common: CommonArgs,
        /// Output CSV path (standard output when omitted).
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Single-point joint power-split/blocklength solve; JSON on standard
    /// output.
    Solve {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Self-check battery; byte-stable report, exit 0 only if all pass.
    Validate {
        #[command(flatten)]
        common: CommonArgs,
        /// Report path (standard output when omitted).
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Fault-injection hook: corrupt one inversion weight in the
        /// closed-form path; the far-window equivalence row must fail.
        #[arg(long, hide = true)]
        corrupt_omega: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Figure1 { common, out } => {
            commands::cmd_figure1(&common.into(), out.as_deref())
        }
        Command::Figure2 { common, out } => {
            commands::cmd_figure2(&common.into(), out.as_deref())
        }
        Command::Figure3 { common, out } => {
            commands::cmd_figure3(&common.into(), out.as_deref())
        }
        Command::Solve { common } => commands::cmd_solve(&common.into()),
        Command::Validate { common, out, corrupt_omega } => {
            commands::cmd_validate(&common.into(), out.as_deref(), *corrupt_omega)
        }
    };
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}
