//! Plain-text edge lists.
//!
//! One edge per line as `u v [weight]`, whitespace separated, node indices
//! 0-based unless [`ReadOptions::one_based`] is set. Lines starting with `#`
//! or `%` are comments. A `# nodes: N` comment fixes the node count;
//! otherwise it is the largest index plus one.
//!
//! The writer emits edges in the graph's own order, so reading back gives
//! the same graph with the same edge indices. Writing `g.canonical()` gives
//! the sorted canonical form. Weights equal to 1 are omitted; others use 12
//! significant digits, or the shortest exact form when 12 digits would not
//! read back to the same value.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, Default)]
pub struct ReadOptions {
    pub one_based: bool,
    /// Overrides both the header and the inferred node count.
    pub node_count: Option<usize>,
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    read_edge_list_with(path, ReadOptions::default())
}

pub fn read_edge_list_with(path: impl AsRef<Path>, opts: ReadOptions) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(&text, &path.display().to_string(), opts)
}

fn node_header(line: &str) -> Option<&str> {
    let body = line.trim_start_matches(['#', '%']).trim();
    body.strip_prefix("nodes:").map(str::trim)
}

/// Parses edge-list text. `origin` names the source in error messages.
pub fn parse_edge_list(text: &str, origin: &str, opts: ReadOptions) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Parse {
        path: origin.to_string(),
        line,
        message,
    };
    let mut header_nodes = None;
    let mut edges = Vec::new();
    let mut lines_of = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') || line.starts_with('%') {
            if let Some(v) = node_header(line) {
                header_nodes = Some(
                    v.parse::<usize>()
                        .map_err(|_| err(line_no, format!("bad node count '{v}'")))?,
                );
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(err(
                line_no,
                format!("expected 'u v [weight]', found {} fields", fields.len()),
            ));
        }
        let node = |s: &str| -> Result<usize> {
            let x: usize = s
                .parse()
                .map_err(|_| err(line_no, format!("bad node index '{s}'")))?;
            if opts.one_based {
                x.checked_sub(1)
                    .ok_or_else(|| err(line_no, "index 0 in a 1-based file".into()))
            } else {
                Ok(x)
            }
        };
        let u = node(fields[0])?;
        let v = node(fields[1])?;
        let w = match fields.get(2) {
            Some(s) => s
                .parse::<f64>()
                .map_err(|_| err(line_no, format!("bad weight '{s}'")))?,
            None => 1.0,
        };
        edges.push(Edge::new(u, v, w));
        lines_of.push(line_no);
    }
    let inferred = edges.iter().map(|e| e.u.max(e.v) + 1).max().unwrap_or(0);
    let n = opts.node_count.or(header_nodes).unwrap_or(inferred);
    Graph::new(n, edges).map_err(|e| {
        let index = match &e {
            Error::SelfLoop { index, .. }
            | Error::DuplicateEdge { index, .. }
            | Error::NodeOutOfRange { index, .. }
            | Error::InvalidWeight { index, .. } => Some(*index),
            _ => None,
        };
        match index {
            Some(i) => err(lines_of[i], e.to_string()),
            None => err(0, e.to_string()),
        }
    })
}

/// `%.12g`-style formatting with trailing zeros removed.
fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    let s = if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{x:.11e}");
        let (mant, e) = s.split_once('e').expect("exponent form");
        let mant = if mant.contains('.') {
            mant.trim_end_matches('0').trim_end_matches('.')
        } else {
            mant
        };
        format!("{mant}e{e}")
    };
    s
}

pub fn format_weight(w: f64) -> String {
    let s = format_sig12(w);
    if s.parse::<f64>().ok() == Some(w) {
        s
    } else {
        format!("{w}")
    }
}

pub fn edge_list_string(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# nodes: {}", g.node_count());
    for e in g.edges() {
        if e.weight == 1.0 {
            let _ = writeln!(out, "{} {}", e.u, e.v);
        } else {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, format_weight(e.weight));
        }
    }
    out
}

pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, edge_list_string(g)).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}
