fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(freeset_cli::run(&argv));
}
