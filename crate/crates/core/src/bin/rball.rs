fn main() {
    std::process::exit(rball::cli::run(std::env::args_os()));
}
