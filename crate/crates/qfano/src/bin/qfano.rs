fn main() {
    let (code, output) = qfano::cli::run(std::env::args());
    print!("{output}");
    std::process::exit(code);
}
