fn main() {
    std::process::exit(qschur::cli::main_from(std::env::args_os()));
}
