use std::fmt::Write as _;
use std::path::Path;

use tanner_core::graph::TannerGraph;

use super::{content_lines, parse_numbers, read, write, FormatError, FormatResult};

/// Parses MacKay's alist format. Rows are checks and columns variables;
/// each row list keeps its order, which fixes the sub-code coordinates of a
/// GLDPC check. Zero padding is accepted and ignored.
pub fn parse_alist(text: &str) -> FormatResult<TannerGraph> {
    let mut lines = content_lines(text, false);
    let mut last_line = 0;
    let mut next = |what: &str| -> FormatResult<(usize, Vec<usize>)> {
        match lines.next() {
            Some((no, body)) => {
                last_line = no;
                Ok((no, parse_numbers(no, body)?))
            }
            None => Err(FormatError::at(last_line + 1, format!("unexpected end of file, expected {what}"))),
        }
    };
    let (no, dims) = next("the dimensions line")?;
    let [n, m] = dims[..] else {
        return Err(FormatError::at(no, "expected `n_vars n_checks`"));
    };
    let (no, maxes) = next("the maximum-degree line")?;
    let [max_col, max_row] = maxes[..] else {
        return Err(FormatError::at(no, "expected `max_var_degree max_check_degree`"));
    };
    let (no, col_weights) = next("the variable degree list")?;
    if col_weights.len() != n {
        return Err(FormatError::at(no, format!("expected {n} variable degrees, found {}", col_weights.len())));
    }
    if let Some(w) = col_weights.iter().find(|&&w| w > max_col) {
        return Err(FormatError::at(no, format!("variable degree {w} exceeds the declared maximum {max_col}")));
    }
    let (no, row_weights) = next("the check degree list")?;
    if row_weights.len() != m {
        return Err(FormatError::at(no, format!("expected {m} check degrees, found {}", row_weights.len())));
    }
    if let Some(w) = row_weights.iter().find(|&&w| w > max_row) {
        return Err(FormatError::at(no, format!("check degree {w} exceeds the declared maximum {max_row}")));
    }
    let mut col_lists = Vec::with_capacity(n);
    if max_col > 0 {
        for (v, &w) in col_weights.iter().enumerate() {
            let (no, entries) = next("a variable neighbour list")?;
            col_lists.push((no, read_list(no, &entries, w, m, "variable", v)?));
        }
    }
    let mut checks = Vec::with_capacity(m);
    if max_row > 0 {
        for (c, &w) in row_weights.iter().enumerate() {
            let (no, entries) = next("a check neighbour list")?;
            checks.push(read_list(no, &entries, w, n, "check", c)?);
        }
    } else {
        checks.resize(m, Vec::new());
    }
    if let Some((no, _)) = lines.next() {
        return Err(FormatError::at(no, "trailing content after the last check list"));
    }
    let g = TannerGraph::new(n, checks)?;
    for (v, (no, list)) in col_lists.iter().enumerate() {
        let mut sorted = list.clone();
        sorted.sort_unstable();
        if sorted != g.var_neighbors(v) {
            return Err(FormatError::at(*no, format!("variable {} list disagrees with the check lists", v + 1)));
        }
    }
    Ok(g)
}

/// Converts a 1-based padded list to 0-based indices, checking its length.
fn read_list(no: usize, entries: &[usize], weight: usize, bound: usize, kind: &str, idx: usize) -> FormatResult<Vec<usize>> {
    let nonzero: Vec<usize> = entries.iter().copied().filter(|&x| x != 0).collect();
    if nonzero.len() != weight {
        return Err(FormatError::at(no, format!("{kind} {} declares degree {weight} but lists {}", idx + 1, nonzero.len())));
    }
    if entries[..weight].contains(&0) {
        return Err(FormatError::at(no, format!("{kind} {} has padding before its last entry", idx + 1)));
    }
    if let Some(x) = nonzero.iter().find(|&&x| x > bound) {
        return Err(FormatError::at(no, format!("index {x} is out of range 1..={bound}")));
    }
    Ok(nonzero.into_iter().map(|x| x - 1).collect())
}

/// Writes the alist form, zero-padding every list to the maximum degree.
pub fn write_alist(g: &TannerGraph) -> String {
    let n = g.n_vars();
    let m = g.n_checks();
    let max_col = g.max_var_degree();
    let max_row = g.max_check_degree();
    let mut out = String::new();
    let join = |xs: &mut dyn Iterator<Item = usize>| xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "{n} {m}");
    let _ = writeln!(out, "{max_col} {max_row}");
    let _ = writeln!(out, "{}", join(&mut (0..n).map(|v| g.var_degree(v))));
    let _ = writeln!(out, "{}", join(&mut (0..m).map(|c| g.check_degree(c))));
    let padded = |list: &[usize], width: usize| {
        let mut items: Vec<usize> = list.iter().map(|&x| x + 1).collect();
        items.resize(width, 0);
        items
    };
    for v in 0..n {
        let _ = writeln!(out, "{}", join(&mut padded(g.var_neighbors(v), max_col).into_iter()));
    }
    for c in 0..m {
        let _ = writeln!(out, "{}", join(&mut padded(g.check_neighbors(c), max_row).into_iter()));
    }
    out
}

pub fn load_alist(path: impl AsRef<Path>) -> FormatResult<TannerGraph> {
    parse_alist(&read(path.as_ref())?)
}

pub fn save_alist(g: &TannerGraph, path: impl AsRef<Path>) -> FormatResult<()> {
    write(path.as_ref(), &write_alist(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EIGHT_CYCLE: &str = "4 4\n2 2\n2 2 2 2\n2 2 2 2\n1 4\n1 2\n2 3\n3 4\n1 2\n2 3\n3 4\n4 1\n";

    #[test]
    fn parses_eight_cycle() {
        let g = parse_alist(EIGHT_CYCLE).unwrap();
        assert_eq!((g.n_vars(), g.n_checks(), g.girth()), (4, 4, Some(8)));
        assert_eq!(g.check_neighbors(3), &[3, 0]);
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let g = parse_alist(EIGHT_CYCLE).unwrap();
        let text = write_alist(&g);
        assert_eq!(parse_alist(&text).unwrap(), g);
        assert_eq!(write_alist(&parse_alist(&text).unwrap()), text);
    }

    #[test]
    fn errors_name_lines() {
        let bad_degree = EIGHT_CYCLE.replacen("2 2 2 2\n2 2 2 2", "2 2 2 2\n2 2 3 2", 1);
        let err = parse_alist(&bad_degree).unwrap_err().to_string();
        assert!(err.starts_with("line 4:"), "{err}");
        let bad_col = EIGHT_CYCLE.replacen("1 4\n", "1 3\n", 1);
        let err = parse_alist(&bad_col).unwrap_err().to_string();
        assert!(err.starts_with("line 5:"), "{err}");
        let truncated: String = EIGHT_CYCLE.lines().take(9).map(|l| format!("{l}\n")).collect();
        assert!(parse_alist(&truncated).unwrap_err().to_string().contains("unexpected end of file"));
        assert!(parse_alist("4 4 4\n").unwrap_err().to_string().starts_with("line 1:"));
    }

    #[test]
    fn padding_is_accepted() {
        let text = "3 2\n2 3\n1 2 1\n3 1\n1 0\n1 2\n1 0\n1 2 3\n2 0 0\n";
        let g = parse_alist(text).unwrap();
        assert_eq!(g.check_neighbors(1), &[1]);
        assert_eq!(write_alist(&g), text);
    }
}
