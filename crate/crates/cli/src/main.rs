use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    partition_forge::parallel::init_from_env();
    let code = partition_forge_cli::run(std::env::args_os().skip(1), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(code as u8)
}
