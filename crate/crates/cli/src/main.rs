use clap::Parser;

use lieforge_cli::app::{run, Cli};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse_from(&argv);
    let outcome = run(cli, &argv);
    print!("{}", outcome.stdout);
    std::process::exit(outcome.code);
}
