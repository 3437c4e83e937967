use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = nalab::cli::run(std::env::args_os());
    if code == nalab::cli::EXIT_USAGE {
        eprint!("{out}");
    } else {
        print!("{out}");
        std::io::stdout().flush().ok();
    }
    ExitCode::from(code as u8)
}
