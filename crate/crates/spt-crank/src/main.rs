use std::process::ExitCode;

fn main() -> ExitCode {
    spt_crank::cli::main()
}
