fn main() {
    std::process::exit(cuspidal::cli::main());
}
