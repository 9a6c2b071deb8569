//! Command-line front end: argument parsing, orchestration and reports.

mod args;
mod commands;
mod report;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Format};
pub use report::{Report, Status, Verification};

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text },
            };
        }
    };
    match commands::execute(&cli.command) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            let code = if report.failed() { EXIT_VERIFICATION } else { EXIT_OK };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(message) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {message}\n") },
    }
}
