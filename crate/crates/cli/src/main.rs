fn main() {
    std::process::exit(glocon_cli::run(std::env::args_os()));
}
