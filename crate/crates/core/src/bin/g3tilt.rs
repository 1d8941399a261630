use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = g3tilt::cli::execute(std::env::args_os());
    if code == g3tilt::cli::EXIT_OK {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    ExitCode::from(code as u8)
}
