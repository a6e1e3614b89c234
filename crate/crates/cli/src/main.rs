//! `sae-radial` command-line front end.
//!
//! Exit codes: 0 on success, 1 when the physics rejects the input (or a
//! verification criterion fails), 2 on usage errors.

mod args;
mod commands;
mod render;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, OutputArgs};
use commands::CliError;

const THREADS_VAR: &str = "SAE_RADIAL_THREADS";

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR} must be an integer >= 1, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Domain(format!("thread pool: {e}")))
}

fn output_args(c: &Command) -> &OutputArgs {
    match c {
        Command::Classify { out, .. }
        | Command::BoundState { out, .. }
        | Command::Wavefunction { out, .. }
        | Command::PhaseShift { out, .. }
        | Command::SMatrix { out, .. }
        | Command::Pole { out, .. }
        | Command::Scan { out, .. }
        | Command::Verify { out, .. } => out,
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    configure_threads()?;
    let artifact = commands::run(&cli.command)?;
    let out = output_args(&cli.command);
    let text = render::render(&artifact.report, out.format.unwrap_or(artifact.default_format));
    match &out.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(artifact.success)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
