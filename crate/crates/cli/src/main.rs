fn main() {
    std::process::exit(purecone::run(std::env::args_os()));
}
