use std::io::Write;

use clap::Parser;

fn main() {
    let cli = evprop_cli::Cli::parse();
    let out = evprop_cli::run(&cli);
    std::io::stdout().write_all(out.stdout.as_bytes()).unwrap();
    std::io::stderr().write_all(out.stderr.as_bytes()).unwrap();
    std::process::exit(out.code);
}
