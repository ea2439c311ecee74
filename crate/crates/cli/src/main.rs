use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = barycev_cli::main_with(std::env::args_os().skip(1), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(status as u8)
}
