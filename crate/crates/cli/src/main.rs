mod args;
mod commands;
mod record;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};
use commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut lines = Vec::new();
    let code = match commands::run(&cli.command) {
        Ok(reports) => {
            for r in &reports {
                match cli.format {
                    Format::Text if !r.text.is_empty() => lines.push(r.text()),
                    Format::Records => lines.extend(r.record.as_ref().map(|rec| rec.to_json())),
                    _ => {}
                }
            }
            u8::from(reports.iter().any(|r| !r.pass))
        }
        Err(Failure::Math(msg)) => {
            if cli.format == Format::Records {
                lines.push(commands::failed_record(&cli.command, msg.clone()).to_json());
            }
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    };
    let out = std::io::stdout();
    let mut out = out.lock();
    for l in lines {
        let _ = writeln!(out, "{l}");
    }
    ExitCode::from(code)
}
