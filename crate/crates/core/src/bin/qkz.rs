fn main() {
    std::process::exit(qkz_hirota::cli::run(std::env::args_os()));
}
