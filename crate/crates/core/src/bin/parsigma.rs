fn main() {
    std::process::exit(parsigma::cli::run(std::env::args_os()));
}
