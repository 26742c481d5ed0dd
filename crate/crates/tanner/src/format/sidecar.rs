use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use tanner_core::graph::NodeSet;

use super::{content_lines, parse_numbers, read, write, FormatError, FormatResult};

/// Index lists accompanying a graph file, one `key: i j k …` line each
/// (0-based). The `set` key holds the trapping-set variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sidecar {
    pub lists: BTreeMap<String, Vec<usize>>,
}

impl Sidecar {
    pub fn with_set(set: &NodeSet) -> Self {
        let mut s = Sidecar::default();
        s.lists.insert("set".into(), set.as_slice().to_vec());
        s
    }

    pub fn insert(&mut self, key: &str, values: &[usize]) {
        self.lists.insert(key.into(), values.to_vec());
    }

    pub fn get(&self, key: &str) -> Option<&[usize]> {
        self.lists.get(key).map(Vec::as_slice)
    }

    /// The `set` list as a node set over `n` variables.
    pub fn set(&self, n: usize) -> FormatResult<NodeSet> {
        let list = self.get("set").ok_or_else(|| FormatError::at(0, "sidecar has no `set` line"))?;
        Ok(NodeSet::new(list.to_vec(), n)?)
    }
}

pub fn parse_sidecar(text: &str) -> FormatResult<Sidecar> {
    let mut out = Sidecar::default();
    for (no, body) in content_lines(text, true) {
        let Some((key, values)) = body.split_once(':') else {
            return Err(FormatError::at(no, "expected `key: indices`"));
        };
        let key = key.trim();
        if out.lists.contains_key(key) {
            return Err(FormatError::at(no, format!("duplicate key `{key}`")));
        }
        out.lists.insert(key.to_owned(), parse_numbers(no, values)?);
    }
    Ok(out)
}

pub fn write_sidecar(s: &Sidecar) -> String {
    let mut out = String::from("# 0-based indices\n");
    for (key, values) in &s.lists {
        let joined: Vec<String> = values.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{key}: {}", joined.join(" "));
    }
    out
}

pub fn load_sidecar(path: impl AsRef<Path>) -> FormatResult<Sidecar> {
    parse_sidecar(&read(path.as_ref())?)
}

pub fn save_sidecar(s: &Sidecar, path: impl AsRef<Path>) -> FormatResult<()> {
    write(path.as_ref(), &write_sidecar(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut s = Sidecar::with_set(&NodeSet::new(vec![3, 0, 2], 5).unwrap());
        s.insert("inner_checks", &[7, 9]);
        let text = write_sidecar(&s);
        assert_eq!(parse_sidecar(&text).unwrap(), s);
        assert_eq!(s.set(5).unwrap().as_slice(), &[0, 2, 3]);
        assert!(s.set(3).is_err());
    }

    #[test]
    fn malformed() {
        assert!(parse_sidecar("set 1 2\n").unwrap_err().to_string().starts_with("line 1:"));
        assert!(parse_sidecar("set: 1\nset: 2\n").unwrap_err().to_string().starts_with("line 2:"));
        assert!(parse_sidecar("set: 1 x\n").is_err());
    }
}
