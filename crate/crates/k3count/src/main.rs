fn main() {
    std::process::exit(k3count::cli::run(std::env::args_os()));
}
