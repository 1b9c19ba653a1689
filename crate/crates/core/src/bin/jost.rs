fn main() {
    std::process::exit(jacobi_jost::cli::main_exit_code());
}
