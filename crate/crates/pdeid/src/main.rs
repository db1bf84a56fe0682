fn main() {
    std::process::exit(pdeid::cli::run());
}
