use std::io::Write;

fn main() {
    let result = bzinfo::cli::run(std::env::args_os());
    // a closed pipe is not an error of the tool
    let _ = writeln!(std::io::stdout().lock(), "{}", result.stdout);
    std::process::exit(result.code);
}
