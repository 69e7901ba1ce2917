use clap::Parser;

fn main() {
    let cli = dbakit::cli::Cli::parse();
    std::process::exit(dbakit::cli::run(cli));
}
