fn main() {
    std::process::exit(bloch_radius::cli::run(std::env::args_os()));
}
