fn main() {
    std::process::exit(bimatch::cli::run(std::env::args_os()));
}
