//! Text formats: alist parity-check matrices, plain edge lists, sub-code
//! generator specs and trapping-set sidecars.
//!
//! Each format has a `parse_*`/`write_*` pair over strings and a
//! `load_*`/`save_*` pair over paths. Parse errors carry 1-based line
//! numbers.

mod alist;
mod edgelist;
mod sidecar;
mod subcode;

pub use alist::{load_alist, parse_alist, save_alist, write_alist};
pub use edgelist::{load_edge_list, parse_edge_list, save_edge_list, write_edge_list};
pub use sidecar::{load_sidecar, parse_sidecar, save_sidecar, write_sidecar, Sidecar};
pub use subcode::{load_subcode, parse_subcode, save_subcode, write_subcode};

use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] tanner_core::Error),
}

impl FormatError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        FormatError::Parse { line, message: message.into() }
    }
}

pub type FormatResult<T> = Result<T, FormatError>;

fn read(path: &Path) -> FormatResult<String> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, text: &str) -> FormatResult<()> {
    std::fs::write(path, text).map_err(|source| FormatError::Io { path: path.to_owned(), source })
}

/// Non-blank lines with their 1-based numbers; text after `#` is dropped
/// when `comments` is set.
fn content_lines(text: &str, comments: bool) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let body = if comments { raw.split('#').next().unwrap_or("") } else { raw };
        let body = body.trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_numbers(line: usize, body: &str) -> FormatResult<Vec<usize>> {
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| FormatError::at(line, format!("expected a non-negative integer, found `{t}`"))))
        .collect()
}
