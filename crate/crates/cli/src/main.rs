use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use graphdesign::cli::{run, Cli};

fn main() -> ExitCode {
    // The binary path varies between installs; echo a fixed name instead.
    let argv: Vec<String> = std::iter::once("graphdesign".to_string())
        .chain(std::env::args().skip(1))
        .collect();
    let cli = Cli::parse();
    match run(&cli, argv) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            // A closed pipe (`| head`) is the reader's choice, not a failure.
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: writing report: {e}");
                    ExitCode::FAILURE
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
