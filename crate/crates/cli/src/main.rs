fn main() {
    std::process::exit(gaussgap_cli::main_impl());
}
