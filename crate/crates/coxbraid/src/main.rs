fn main() {
    std::process::exit(coxbraid::cli::run(std::env::args_os()));
}
