use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gpw_core::fixtures::Corpus;
use gpw_core::session::{parse_session, run_tasks, ReportFormat, Session};

#[derive(Parser)]
#[command(name = "gpw", version, about = "Exact checks for Frobenius extensions and Gorenstein projective modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every task in a session file and print the report.
    Run {
        session: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse and validate a session file without running its tasks.
    Validate { session: PathBuf },
    /// Inspect the built-in fixture corpus.
    Fixtures {
        #[command(subcommand)]
        command: FixturesCommand,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// One line per fixture.
    List,
    /// Full structured description of one fixture.
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

const EXIT_TASK_ERROR: u8 = 1;
const EXIT_INVALID: u8 = 2;

fn load(path: &PathBuf) -> Result<Session, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("gpw: cannot read {}: {e}", path.display());
        ExitCode::from(EXIT_INVALID)
    })?;
    parse_session(&text).map_err(|e| {
        eprintln!("gpw: {}: {e}", path.display());
        ExitCode::from(EXIT_INVALID)
    })
}

/// A closed pipe downstream is not a failure of the command.
fn stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { session, format, out } => {
            let session = match load(&session) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let report = run_tasks(&session);
            let format = match format {
                Format::Text => ReportFormat::Text,
                Format::Structured => ReportFormat::Structured,
            };
            let body = report.emit(format);
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, body) {
                        eprintln!("gpw: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_TASK_ERROR);
                    }
                }
                None => stdout(&body),
            }
            if report.has_errors() {
                ExitCode::from(EXIT_TASK_ERROR)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Validate { session } => match load(&session) {
            Ok(s) => {
                stdout(&format!("ok: {} tasks, field {}\n", s.tasks.len(), s.registry.field));
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
        Command::Fixtures { command } => {
            let corpus = Corpus::build();
            match command {
                FixturesCommand::List => {
                    let lines: String = corpus
                        .names()
                        .into_iter()
                        .map(|(kind, name, desc)| format!("{kind:<10} {name:<32} {desc}\n"))
                        .collect();
                    stdout(&lines);
                    ExitCode::SUCCESS
                }
                FixturesCommand::Show { name } => match corpus.show(&name) {
                    Some(v) => {
                        stdout(&(serde_json::to_string_pretty(&v).expect("value serializes") + "\n"));
                        ExitCode::SUCCESS
                    }
                    None => {
                        eprintln!("gpw: no fixture named {name:?}");
                        ExitCode::from(EXIT_INVALID)
                    }
                },
            }
        }
    }
}
