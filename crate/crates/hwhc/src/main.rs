use std::io::Write;

use clap::Parser;

fn main() {
    let cli = hwhc::cli::Cli::parse();
    match hwhc::cli::run(cli) {
        // Write errors (e.g. a closed pipe under `hwhc hasse ... | head`)
        // are not failures of the computation itself.
        Ok(out) => {
            let _ = writeln!(std::io::stdout(), "{out}");
        }
        Err(e) => {
            if let Some(payload) = e.stdout_payload() {
                let _ = writeln!(std::io::stdout(), "{payload}");
            }
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
