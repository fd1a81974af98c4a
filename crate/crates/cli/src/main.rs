fn main() {
    std::process::exit(isospec::run(std::env::args_os()));
}
