fn main() {
    std::process::exit(matchgeo::cli::run(std::env::args().skip(1)));
}
