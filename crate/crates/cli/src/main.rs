use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = nilmult_cli::run(std::env::args_os());
    // Ignore write errors: a closed stdout pipe should not turn into a panic.
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
