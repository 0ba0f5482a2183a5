fn main() {
    std::process::exit(eyt::cli::main_with_args(std::env::args_os()));
}
