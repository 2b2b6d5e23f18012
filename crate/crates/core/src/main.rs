fn main() {
    std::process::exit(heawood::cli::run(std::env::args_os()));
}
