fn main() {
    std::process::exit(adrlab::cli::run_from_env());
}
