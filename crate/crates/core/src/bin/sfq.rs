fn main() {
    std::process::exit(sfq::cli::main());
}
