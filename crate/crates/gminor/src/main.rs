fn main() {
    std::process::exit(gminor::cli::main_with_args(std::env::args_os()));
}
