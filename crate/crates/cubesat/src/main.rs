use clap::Parser;

fn main() {
    let cli = cubesat::cli::Cli::parse();
    std::process::exit(cubesat::cli::run(cli));
}
