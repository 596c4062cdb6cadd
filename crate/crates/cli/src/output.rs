//! Table emission and the error line written on failure.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::ValueEnum;
use keli::table::Table;
use keli::Error;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Writes `table` with `comments` as its header, to `out` or stdout.
pub fn emit(table: &Table, comments: &[String], format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let text = match format {
        Format::Csv => table.to_csv(comments),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&table.to_json(comments)).expect("tables serialize");
            s.push('\n');
            s
        }
    };
    write_text(&text, out)
}

pub fn write_text(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| {
            CliError::from(Error::Io {
                path: path.to_owned(),
                source: e,
            })
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Shell-style rendering of the command line for the config echo.
pub fn command_line(argv: &[String]) -> String {
    let mut parts = vec!["keli".to_owned()];
    for a in argv.iter().skip(1) {
        let plain = !a.is_empty()
            && a.chars().all(|c| c.is_ascii_alphanumeric() || "-_.,/=:+".contains(c));
        parts.push(if plain { a.clone() } else { format!("'{}'", a.replace('\'', r"'\''")) });
    }
    parts.join(" ")
}

/// A failure that ends the run with exit code 2, or 1 for usage errors.
#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
    pub usage: bool,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            kind: "usage",
            message: message.into(),
            usage: true,
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Self {
            kind: "verification",
            message: message.into(),
            usage: false,
        }
    }

    /// `error<TAB>kind<TAB>message`, one line.
    pub fn line(&self) -> String {
        format!("error\t{}\t{}", self.kind, self.message.replace(['\n', '\t'], " "))
    }

    pub fn code(&self) -> ExitCode {
        ExitCode::from(if self.usage { 1 } else { 2 })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::InsufficientPrecision(_) => "insufficient_precision",
            Error::Pole(_) => "pole",
            Error::Domain(_) => "domain",
            Error::ParameterValidation { .. } => "parameter_validation",
            Error::BranchCut(_) => "branch_cut",
            Error::VersionMismatch { .. } => "version_mismatch",
            Error::Truncated { .. } => "truncated",
            Error::Parse { .. } => "parse",
            Error::Structure(_) => "structure",
            Error::InsufficientTruncation { .. } => "insufficient_truncation",
            Error::UnwrapFailure { .. } => "unwrap_failure",
            Error::Aliasing { .. } => "aliasing",
            Error::NonConvergence { .. } => "non_convergence",
            Error::DerivativeUnderflow(_) => "derivative_underflow",
            Error::InsufficientData(_) => "insufficient_data",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Io { .. } => "io",
        };
        Self {
            kind,
            message: e.to_string(),
            usage: false,
        }
    }
}
