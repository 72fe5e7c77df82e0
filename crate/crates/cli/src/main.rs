use std::process::ExitCode;

use clap::Parser;
use shapecalc_cli::{execute, render, Cli, CliError};

fn run() -> Result<i32, CliError> {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().collect();
    let report = execute(&cli, command)?;
    let output = cli.output();
    let text = render(&report, output.format);
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{text}"),
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("shapecalc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
