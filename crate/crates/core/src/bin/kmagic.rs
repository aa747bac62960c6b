fn main() {
    std::process::exit(kmagic::cli::run(std::env::args_os()));
}
