fn main() {
    std::process::exit(game_redesign::cli::main());
}
