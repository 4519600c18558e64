fn main() {
    std::process::exit(halfpipe::cli::run(std::env::args_os()));
}
