fn main() {
    std::process::exit(liext::cli::run(std::env::args()));
}
