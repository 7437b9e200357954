fn main() {
    std::process::exit(ydscreen_tool::run(std::env::args().collect()));
}
