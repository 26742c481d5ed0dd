use std::fmt::Write as _;
use std::path::Path;

use tanner_core::graph::GeneralGraph;

use super::{content_lines, parse_numbers, read, write, FormatError, FormatResult};

/// Parses a 0-based edge list: one `u v` pair per line, `#` comments. A
/// `# nodes: N` comment fixes the node count (needed for isolated nodes);
/// otherwise it is one more than the largest index.
pub fn parse_edge_list(text: &str) -> FormatResult<GeneralGraph> {
    let mut declared = None;
    for (i, raw) in text.lines().enumerate() {
        let Some(comment) = raw.split_once('#').map(|(_, c)| c.trim()) else { continue };
        if let Some(count) = comment.strip_prefix("nodes:") {
            let count = count.trim().parse::<usize>().map_err(|_| FormatError::at(i + 1, "malformed `# nodes:` header"))?;
            declared = Some((i + 1, count));
        }
    }
    let mut edges = Vec::new();
    for (no, body) in content_lines(text, true) {
        let nums = parse_numbers(no, body)?;
        let [u, v] = nums[..] else {
            return Err(FormatError::at(no, "expected exactly two node indices"));
        };
        if u == v {
            return Err(FormatError::at(no, format!("self-loop at node {u}")));
        }
        edges.push((no, u, v));
    }
    let inferred = edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some((no, count)) if count < inferred => {
            return Err(FormatError::at(no, format!("declares {count} nodes but index {} appears", inferred - 1)));
        }
        Some((_, count)) => count,
        None => inferred,
    };
    let mut seen = std::collections::HashSet::new();
    for &(no, u, v) in &edges {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(FormatError::at(no, format!("duplicate edge {u} {v}")));
        }
    }
    Ok(GeneralGraph::new(n, edges.into_iter().map(|(_, u, v)| (u, v)))?)
}

/// Writes the edge list with a `# nodes:` header, edges in stored order.
pub fn write_edge_list(g: &GeneralGraph) -> String {
    let mut out = format!("# nodes: {}\n", g.n_nodes());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn load_edge_list(path: impl AsRef<Path>) -> FormatResult<GeneralGraph> {
    parse_edge_list(&read(path.as_ref())?)
}

pub fn save_edge_list(g: &GeneralGraph, path: impl AsRef<Path>) -> FormatResult<()> {
    write(path.as_ref(), &write_edge_list(g))
}
