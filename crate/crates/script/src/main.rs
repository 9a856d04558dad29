use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pg_script::{execute, load, RunOptions};

#[derive(Parser)]
#[command(name = "pg", version, about = "Run projective construction scripts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script and print its report
    Run {
        script: PathBuf,
        /// Write emitted files but print no report
        #[arg(long)]
        emit_only: bool,
        /// Continue past runtime errors
        #[arg(long)]
        keep_going: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Directory for relative emit paths
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Parse and check a script without running it
    Check { script: PathBuf },
    /// Print a script in canonical form
    Fmt { script: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("pg: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            script,
            emit_only,
            keep_going,
            format,
            out_dir,
        } => {
            let text = match read(&script) {
                Ok(t) => t,
                Err(code) => return code,
            };
            let opts = RunOptions { keep_going, out_dir };
            let report = execute(&script.display().to_string(), &text, &opts);
            if !emit_only {
                match format {
                    Format::Text => print!("{}", report.to_text()),
                    Format::Json => println!("{}", report.to_json()),
                }
            }
            ExitCode::from(report.exit_code as u8)
        }
        Command::Check { script } => {
            let text = match read(&script) {
                Ok(t) => t,
                Err(code) => return code,
            };
            match load(&text) {
                Ok(s) => {
                    println!("ok: {} statements", s.statements.len());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{}: {e}", script.display());
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
        Command::Fmt { script } => {
            let text = match read(&script) {
                Ok(t) => t,
                Err(code) => return code,
            };
            match load(&text) {
                Ok(s) => {
                    print!("{s}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{}: {e}", script.display());
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
    }
}
