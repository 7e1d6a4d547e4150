fn main() {
    std::process::exit(convex_calculus::cli::run(std::env::args_os()));
}
