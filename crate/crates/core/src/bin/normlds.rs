fn main() {
    std::process::exit(normlds::cli::main_with_args(std::env::args_os()));
}
