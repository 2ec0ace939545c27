use std::io::{self, Write};

fn main() {
    let stdin = io::stdin();
    let out = dompoly_core::cli::dispatch(std::env::args_os(), &mut stdin.lock());
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
