//! Command-line front end for `qlattice`: reads operator-set documents and
//! prints lattice, axiom and irreducibility reports.

pub mod commands;
pub mod demo;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::document::OperatorSetDocument;
use crate::report::{Format, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_USAGE: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}", path = path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}", path = path.display())]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Library(#[from] qlattice::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Io { .. } | CliError::Usage(_) => EXIT_USAGE,
            CliError::Invalid(_) | CliError::Library(_) => EXIT_FAILED,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qlattice",
    version,
    about = "Exact subspace lattices of projection operators"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every context is a family of orthogonal projectors summing to 1
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Invariant-subspace lattice of one context
    ContextLattice {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        context: String,
    },
    /// Intersection of the lattices of all contexts
    Intersect {
        #[arg(long)]
        input: PathBuf,
    },
    /// Dimension of the algebra generated by all projectors
    Burnside {
        #[arg(long)]
        input: PathBuf,
    },
    /// Lattice axioms over the document's subspaces, or over the closure of
    /// all column spaces
    Axioms {
        #[arg(long)]
        input: PathBuf,
    },
    /// Built-in worked examples
    Demo {
        #[command(subcommand)]
        example: DemoExample,
    },
}

#[derive(Debug, Subcommand)]
pub enum DemoExample {
    /// The spin-1/2 projectors along z, x and y
    SpinHalf,
}

pub fn load(path: &Path) -> Result<OperatorSetDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    OperatorSetDocument::from_json(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Validate { input } => Ok(commands::validate(&load(input)?)),
        Command::ContextLattice { input, context } => {
            commands::context_lattice_report(&load(input)?, context)
        }
        Command::Intersect { input } => commands::intersect(&load(input)?),
        Command::Burnside { input } => commands::burnside(&load(input)?),
        Command::Axioms { input } => commands::axioms(&load(input)?),
        Command::Demo {
            example: DemoExample::SpinHalf,
        } => Ok(demo::spin_half()),
    }
}

/// Parses `args`, runs the command and writes its report. Returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let rendered = execute(&cli.command).and_then(|r| Ok((r.render(cli.format)?, r.passed)));
    match rendered {
        Ok((text, passed)) => {
            let _ = out.write_all(text.as_bytes());
            if passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
