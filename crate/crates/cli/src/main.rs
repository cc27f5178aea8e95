use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hrnr_cli::commands::{self, NilpotentArgs, RangeArgs};
use hrnr_cli::{exit_code, CliError, Verdict};
use hrnr_core::engine::{DEFAULT_ANGLES, VERIFY_ANGLES};

/// Higher-rank numerical ranges of complex matrices.
#[derive(Parser)]
#[command(name = "hrnr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Λ_k(T) and write it as JSON (and optionally SVG).
    Range {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Defaults to 720.
        #[arg(long, env = "HRNR_ANGLES")]
        angles: Option<usize>,
        /// Region JSON path; printed to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Dashed reference circle in the SVG.
        #[arg(long)]
        ref_radius: Option<f64>,
    },
    /// Sampled numerical radius.
    Radius {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, env = "HRNR_ANGLES")]
        angles: Option<usize>,
    },
    /// Closed-form ranges of the n×n shift; --out writes the matrix file.
    Shift {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the engine with the shift closed forms up to --max-n.
    VerifyShift {
        #[arg(long)]
        max_n: usize,
        /// Defaults to 2048.
        #[arg(long, env = "HRNR_ANGLES")]
        angles: Option<usize>,
    },
    /// Dilation and Haagerup bounds on random nilpotent contractions.
    VerifyNilpotent {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r_hint: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "HRNR_ANGLES")]
        angles: Option<usize>,
    },
    /// Every applicable property check on one matrix.
    VerifyProperties {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "HRNR_ANGLES")]
        angles: Option<usize>,
    },
}

fn run(command: Command, out: &mut dyn Write) -> Result<Verdict, CliError> {
    match command {
        Command::Range {
            input,
            k,
            angles,
            out: path,
            svg,
            ref_radius,
        } => commands::range(
            &RangeArgs {
                input: &input,
                k,
                angles: angles.unwrap_or(DEFAULT_ANGLES),
                out: path.as_deref(),
                svg: svg.as_deref(),
                ref_radius,
            },
            out,
        ),
        Command::Radius { input, angles } => {
            commands::radius(&input, angles.unwrap_or(DEFAULT_ANGLES), out)
        }
        Command::Shift { n, k, out: path } => commands::shift(n, k, path.as_deref(), out),
        Command::VerifyShift { max_n, angles } => {
            commands::verify_shift(max_n, angles.unwrap_or(VERIFY_ANGLES), out)
        }
        Command::VerifyNilpotent {
            n,
            r_hint,
            trials,
            seed,
            angles,
        } => commands::verify_nilpotent(
            &NilpotentArgs {
                n,
                r_hint,
                trials,
                seed,
                angles: angles.unwrap_or(VERIFY_ANGLES),
            },
            out,
        ),
        Command::VerifyProperties {
            input,
            k,
            seed,
            angles,
        } => commands::verify_properties(&input, k, seed, angles.unwrap_or(VERIFY_ANGLES), out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let outcome = run(cli.command, &mut stdout.lock());
    if let Err(e) = &outcome {
        eprintln!("hrnr: {e}");
    }
    exit_code(&outcome)
}
