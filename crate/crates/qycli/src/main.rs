use std::io::Write;

fn main() {
    let out = qycli::run(std::env::args_os());
    // a closed pipe on stdout is not an error for a report printer
    if !out.stdout.is_empty() {
        let _ = writeln!(std::io::stdout(), "{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", out.stderr);
    }
    std::process::exit(out.code);
}
