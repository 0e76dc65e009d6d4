use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = io::stdout().lock();
    match ffhyper_cli::run(std::env::args_os(), &mut out) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => err.exit(),
    }
}
