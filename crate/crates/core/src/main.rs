fn main() {
    std::process::exit(mvalg::cli::main());
}
