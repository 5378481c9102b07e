use std::process::ExitCode;

fn main() -> ExitCode {
    rootlat::cli::main()
}
