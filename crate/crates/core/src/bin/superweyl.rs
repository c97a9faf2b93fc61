use std::io::Write;

fn main() {
    let outcome = superweyl::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", outcome.stdout.trim_end());
    std::process::exit(outcome.code);
}
