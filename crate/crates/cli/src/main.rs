use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod fail;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().lock().write_all(out.text.as_bytes());
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
