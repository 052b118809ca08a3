use std::process::ExitCode;

fn main() -> ExitCode {
    dualpoly::cli::main()
}
