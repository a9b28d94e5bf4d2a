fn main() {
    std::process::exit(semikit_cli::run(std::env::args_os()));
}
