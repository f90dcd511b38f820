fn main() {
    std::process::exit(pauliwalk::cli::main_from(std::env::args_os()));
}
