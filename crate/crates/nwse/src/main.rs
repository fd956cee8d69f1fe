fn main() {
    std::process::exit(nwse::cli::run(std::env::args_os()));
}
