use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = trialab_cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(trialab_cli::EXIT_INPUT as u8);
    }
    let code = trialab_cli::run(std::env::args_os(), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(code as u8)
}
