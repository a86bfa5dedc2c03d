use clap::Parser;

use signed_alliance::cli::{execute, Cli};

fn main() {
    let result = execute(Cli::parse());
    print!("{}", result.render());
    std::process::exit(result.exit_code());
}
