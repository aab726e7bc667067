fn main() {
    std::process::exit(schelly::cli::run(std::env::args().skip(1)));
}
