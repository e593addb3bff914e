fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = amalgams::cli::run_cli(&args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
