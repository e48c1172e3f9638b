fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(anharmonic::cli::run(&args));
}
