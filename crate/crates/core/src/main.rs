use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = realsep::cli::run(std::env::args_os());
    println!("{}", outcome.render());
    ExitCode::from(outcome.exit_code as u8)
}
