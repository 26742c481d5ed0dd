use std::fmt::Write as _;
use std::path::Path;

use tanner_core::decode::SubCode;

use super::{content_lines, read, write, FormatError, FormatResult};

/// Parses a sub-code spec: a `rho k` line, then `k` generator rows written
/// as strings of `0` and `1`. `#` starts a comment.
pub fn parse_subcode(text: &str) -> FormatResult<SubCode> {
    let mut lines = content_lines(text, true);
    let Some((no, header)) = lines.next() else {
        return Err(FormatError::at(1, "empty sub-code spec"));
    };
    let dims: Vec<&str> = header.split_whitespace().collect();
    let parsed: Option<Vec<usize>> = dims.iter().map(|t| t.parse().ok()).collect();
    let Some([rho, k]) = parsed.as_deref().and_then(|p| <[usize; 2]>::try_from(p).ok()) else {
        return Err(FormatError::at(no, "expected `rho k`"));
    };
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let Some((no, body)) = lines.next() else {
            return Err(FormatError::at(no, format!("expected {k} generator rows")));
        };
        if body.len() != rho || !body.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(FormatError::at(no, format!("generator row must be {rho} characters of 0/1")));
        }
        rows.push(body.bytes().map(|b| b == b'1').collect());
    }
    if let Some((no, _)) = lines.next() {
        return Err(FormatError::at(no, "trailing content after the generator rows"));
    }
    Ok(SubCode::from_generator(rho, &rows)?)
}

/// Writes the spec from the code's generator rows as supplied.
pub fn write_subcode(code: &SubCode) -> String {
    let mut out = format!("{} {}\n", code.len(), code.generator().len());
    for &row in code.generator() {
        let bits: String = (0..code.len()).map(|j| if row >> j & 1 == 1 { '1' } else { '0' }).collect();
        let _ = writeln!(out, "{bits}");
    }
    out
}

pub fn load_subcode(path: impl AsRef<Path>) -> FormatResult<SubCode> {
    parse_subcode(&read(path.as_ref())?)
}

pub fn save_subcode(code: &SubCode, path: impl AsRef<Path>) -> FormatResult<()> {
    write(path.as_ref(), &write_subcode(code))
}
