use clap::Parser;

fn main() {
    let cli = lieclass_cli::Cli::parse();
    match lieclass_cli::run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
