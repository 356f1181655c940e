fn main() {
    std::process::exit(rainbow_schur::cli::main());
}
