fn main() {
    std::process::exit(trimmed_serendipity::cli::run(std::env::args_os()));
}
