mod args;
mod commands;
mod config;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{BoundCommand, Cli, Command};
use commands::{exit, Failure};
use config::FileConfig;

fn run(cli: &Cli) -> Result<i32, Failure> {
    let config = match &cli.config {
        Some(path) => FileConfig::load(path).map_err(Failure::bad_input)?,
        None => FileConfig::default(),
    };
    if let Some(n) = cli.threads.or(config.threads) {
        if n == 0 {
            return Err(Failure::bad_input("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::bad_input(e.to_string()))?;
    }
    match &cli.command {
        Command::Search(a) => commands::search(a, &config),
        Command::Prove(a) => commands::prove_cmd(a, &config),
        Command::Cf(a) => commands::cf(a, &config),
        Command::Bound(BoundCommand::Matveev(a)) => commands::matveev(a, &config),
        Command::Bound(BoundCommand::GuzmanLuca(a)) => commands::guzman_luca_cmd(a, &config),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(exit::BAD_INPUT as u8),
            };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
