fn main() {
    std::process::exit(su3::cli::run(std::env::args_os()));
}
