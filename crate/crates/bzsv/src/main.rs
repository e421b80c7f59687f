fn main() {
    let code = bzsv::cli::run(std::env::args().skip(1).collect());
    std::process::exit(code);
}
