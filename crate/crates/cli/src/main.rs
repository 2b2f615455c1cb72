use std::process::ExitCode;

use clap::Parser;

use wronski_cli::{dispatch, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command, &cli.opts) {
        Ok(report) => {
            print!("{}", report.render(cli.opts.format));
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
