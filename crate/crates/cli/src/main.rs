use std::process::ExitCode;

use clap::Parser;
use treeweights_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let stdout = std::io::stdout();
    match run(&config, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code as u8)
        }
    }
}
