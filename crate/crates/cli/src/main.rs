use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cluster_index_cli::commands::{destination, execute};
use cluster_index_cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match destination(&cli, output.format) {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                let _ = std::fs::create_dir_all(parent);
            }
            std::fs::write(&path, &output.body)
        }
        None => std::io::stdout().lock().write_all(output.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if cli.timing {
        eprintln!("elapsed: {:.3} ms", output.elapsed_ms);
    }
    ExitCode::from(output.exit_code as u8)
}
