use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dexterkit::{dot, dump, parse_dump, parse_script, Workspace};

#[derive(Parser)]
#[command(name = "dexterkit", version, about = "Run hypermedia document scripts")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Execute a JSON-lines script and print the report.
    Run {
        script: PathBuf,
        /// Stop at the first command that is not ok (exit code 2).
        #[arg(long)]
        strict: bool,
        /// Write the final workspace dump here.
        #[arg(long, value_name = "PATH")]
        dump: Option<PathBuf>,
        /// Write the final workspace as Graphviz DOT here.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Parse a dump file and print it back in canonical form.
    Redump { file: PathBuf },
}

fn read(path: &Path) -> Result<String, ExitCode> {
    fs::read_to_string(path).map_err(|e| {
        eprintln!("dexterkit: {}: {e}", path.display());
        ExitCode::from(1)
    })
}

fn write(path: &Path, text: &str) -> Result<(), ExitCode> {
    fs::write(path, text).map_err(|e| {
        eprintln!("dexterkit: {}: {e}", path.display());
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Cmd::Run {
            script,
            strict,
            dump: dump_path,
            dot: dot_path,
        } => {
            let steps = parse_script(&read(&script)?).map_err(|e| {
                eprintln!("dexterkit: {}: {e}", script.display());
                ExitCode::from(1)
            })?;
            let mut ws = Workspace::new();
            let report = ws.run(&steps, strict);
            print!("{report}");
            if let Some(p) = dump_path {
                write(&p, &dump(&ws))?;
            }
            if let Some(p) = dot_path {
                write(&p, &dot(&ws))?;
            }
            Ok(if report.aborted {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Cmd::Redump { file } => {
            let ws = parse_dump(&read(&file)?).map_err(|e| {
                eprintln!("dexterkit: {}: {e}", file.display());
                ExitCode::from(1)
            })?;
            print!("{}", dump(&ws));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
