fn main() {
    std::process::exit(origami_monodromy::cli::run(std::env::args_os()));
}
