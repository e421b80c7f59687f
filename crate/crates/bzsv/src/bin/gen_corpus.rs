fn main() {
    if let Err(e) = bzsv::tables::generate_corpus_files("data") {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
