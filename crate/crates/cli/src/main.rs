use std::process::ExitCode;

use clap::Parser;
use unimod_cli::commands::EXIT_USAGE;
use unimod_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli.command);
    let rendered = render(&report, cli.format);
    print!("{rendered}");
    if report.exit_code == EXIT_USAGE {
        if let Some(reason) = report.notes.last() {
            eprintln!("unimod: {reason}");
        }
    }
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("unimod: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    ExitCode::from(report.exit_code)
}
