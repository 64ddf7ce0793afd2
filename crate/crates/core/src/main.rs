fn main() {
    std::process::exit(linksep::cli::main_with_args(std::env::args_os(), &mut std::io::stdout()));
}
