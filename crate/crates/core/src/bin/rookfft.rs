fn main() {
    std::process::exit(rookfft::cli::main());
}
