fn main() {
    std::process::exit(baggy::cli::run());
}
