use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let (code, out) = nomfix::run(&args);
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
