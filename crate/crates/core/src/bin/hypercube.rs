fn main() {
    std::process::exit(hypercube::cli::main_exit_code())
}
