fn main() {
    std::process::exit(stirling_lambda::cli::run());
}
