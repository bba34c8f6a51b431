fn main() {
    std::process::exit(arbc::cli::main_with_args(std::env::args_os()));
}
