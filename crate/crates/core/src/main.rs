use std::process::ExitCode;

fn main() -> ExitCode {
    polydiff::cli::run(std::env::args_os())
}
