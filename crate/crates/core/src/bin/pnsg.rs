fn main() {
    std::process::exit(pnsg::cli::main());
}
