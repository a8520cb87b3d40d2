use clap::Parser;
use steklov_cli::{args::Cli, execute};

fn main() {
    let cli = Cli::parse();
    std::process::exit(execute(&cli));
}
