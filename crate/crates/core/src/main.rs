use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = BufWriter::new(io::stdout().lock());
    let mut err = io::stderr();
    let code = wiener_cut::cli::run(std::env::args_os(), &mut input, &mut out, &mut err);
    if out.flush().is_err() {
        return ExitCode::from(wiener_cut::cli::EXIT_IO as u8);
    }
    ExitCode::from(code as u8)
}
