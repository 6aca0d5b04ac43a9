fn main() {
    std::process::exit(bei_core::cli::run());
}
