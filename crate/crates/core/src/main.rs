fn main() {
    std::process::exit(partial_theta::cli::main_with_args(std::env::args_os()));
}
