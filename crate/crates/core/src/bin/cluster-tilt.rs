use clap::Parser;

fn main() {
    let cli = cluster_tilt::cli::Cli::parse();
    match cluster_tilt::cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
