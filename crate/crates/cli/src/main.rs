fn main() {
    std::process::exit(a3z_cli::run(std::env::args_os()));
}
