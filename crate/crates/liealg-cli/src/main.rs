use std::process::ExitCode;

fn main() -> ExitCode {
    let output = liealg_cli::run(std::env::args());
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    ExitCode::from(output.code as u8)
}
