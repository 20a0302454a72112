fn main() {
    std::process::exit(projcode_cli::run(std::env::args_os()));
}
