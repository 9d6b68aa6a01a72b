fn main() {
    std::process::exit(peg1d::cli::run(std::env::args_os()));
}
