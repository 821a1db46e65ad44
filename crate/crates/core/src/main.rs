fn main() {
    std::process::exit(sdseq::cli::run_main());
}
