use std::process::ExitCode;

fn main() -> ExitCode {
    coneproc::cli::run(std::env::args_os())
}
