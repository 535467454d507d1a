mod args;
mod build;
mod centrality;
mod compare;
mod exit;
mod generate;
mod io;
mod manifest;

use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command};

fn run(command: &Command) -> Result<()> {
    match command {
        Command::Build(a) => build::run(a, command),
        Command::Sunflower(a) => generate::sunflower(a, command),
        Command::Fixture(a) => generate::fixture(a, command),
        Command::Centrality(a) => centrality::run(a, command),
        Command::Compare(a) => compare::run(a, command),
        Command::Rerun { manifest: path } => {
            let m = manifest::read(path)?;
            if m.version != hyperc::VERSION {
                eprintln!("warning: manifest written by version {}, running {}", m.version, hyperc::VERSION);
            }
            run(&m.config)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::code(&e))
        }
    }
}
