use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, output) = tanner::cli::run(std::env::args_os());
    let _ = if code == 2 {
        std::io::stderr().write_all(output.as_bytes())
    } else {
        std::io::stdout().write_all(output.as_bytes())
    };
    ExitCode::from(code as u8)
}
