mod args;
mod commands;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{Failure, Settings, EXIT_INPUT};

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("MAGNUS_FOREST_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Failure {
            code: EXIT_INPUT,
            message: format!("MAGNUS_FOREST_THREADS must be a positive integer, got {value:?}"),
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("thread pool: {e}"),
        })
}

fn run(cli: Cli) -> Result<commands::Output, Failure> {
    configure_threads()?;
    let settings = Settings {
        format: cli.format,
        parallel: cli.parallel,
        unsafe_degree: cli.unsafe_degree,
    };
    match cli.command {
        Command::Trees { kind, degree } => commands::trees(&settings, kind, degree),
        Command::Coefficients { kind, degree } => {
            commands::coefficients(&settings, kind, degree as usize)
        }
        Command::Verify {
            positional,
            suite,
            degree,
            point,
        } => {
            let name = positional.or(suite).unwrap_or_else(|| "all".into());
            commands::verify(&settings, &name, degree as usize, &point)
        }
        Command::Magnus { degree, point } => commands::magnus(&settings, degree as usize, &point),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.body.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
