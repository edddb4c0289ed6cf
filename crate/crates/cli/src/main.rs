use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use codim4_cli::{run, Cli, CommandReport};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    let elapsed = start.elapsed();
    let mut out = std::io::stdout().lock();
    match outcome {
        Ok(report) => {
            let text = if cli.json { report.to_json() + "\n" } else { report.to_text(cli.quiet, Some(elapsed)) };
            let _ = out.write_all(text.as_bytes());
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let mut r = CommandReport::new("error");
                r.check("error", false, e.to_string());
                r.value("exit_code", code);
                let _ = writeln!(out, "{}", r.to_json());
            }
            eprintln!("error: {e}");
            ExitCode::from(code as u8)
        }
    }
}
