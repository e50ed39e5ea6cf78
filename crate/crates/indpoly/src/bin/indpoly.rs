fn main() {
    std::process::exit(indpoly::cli::run(std::env::args()));
}
