use std::process::ExitCode;

use clap::Parser;
use quadric_bundles::cli::{self, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    let result = cli::run(&args);
    println!("{}", result.render(args.json));
    ExitCode::from(result.exit_code() as u8)
}
