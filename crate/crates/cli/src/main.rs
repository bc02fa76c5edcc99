use std::process::ExitCode;

use clap::Parser;
use lspace_cli::commands::error_report;
use lspace_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            ExitCode::from(u8::try_from(out.exit_code).unwrap_or(2))
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&error_report(&e)).expect("serializable"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}
