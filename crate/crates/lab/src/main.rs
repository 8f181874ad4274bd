fn main() {
    std::process::exit(ferrers_lab::cli::run(std::env::args_os()));
}
