use std::io::Write;

fn main() {
    let out = graded_absorbing::harness::cli_dispatch(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
