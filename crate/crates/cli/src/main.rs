use std::process::ExitCode;

fn main() -> ExitCode {
    dirichlet_cli::run()
}
