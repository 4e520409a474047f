use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = rbd_core::cli::run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        &mut io::stdin().lock(),
    );
    ExitCode::from(status.code() as u8)
}
