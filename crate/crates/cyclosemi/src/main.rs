use std::process::ExitCode;

fn main() -> ExitCode {
    cyclosemi::cli::run()
}
