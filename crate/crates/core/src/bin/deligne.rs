use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = deligne_ring::cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let code = deligne_ring::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
