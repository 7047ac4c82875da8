fn main() {
    std::process::exit(nakayama::cli::run());
}
