use std::io::{self, Write};
use std::process::ExitCode;

fn configure_threads() {
    let Ok(value) = std::env::var("SYMPOW_THREADS") else { return };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("warning: ignoring SYMPOW_THREADS={value:?}; expected a positive integer"),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = sympow_cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
