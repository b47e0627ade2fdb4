//! Edge-list and vertex-set text formats.
//!
//! A graph file starts with a header line `n m` followed by exactly `m` lines
//! `u v`. Blank lines and lines starting with `#` are skipped anywhere. A
//! vertex-set file lists one index per line under the same comment rules.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use graphdesign_core::{Graph, VertexSet};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] graphdesign_core::Error),
}

fn parse_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Duplicate edges are an error unless `Lenient`, which collapses them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    Lenient,
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<const N: usize>(line: usize, text: &str) -> Result<[usize; N], FormatError> {
    let mut out = [0; N];
    let mut fields = text.split_whitespace();
    for slot in &mut out {
        let field = fields
            .next()
            .ok_or_else(|| parse_error(line, format!("expected {N} integers")))?;
        *slot = field
            .parse()
            .map_err(|_| parse_error(line, format!("not a vertex index: {field:?}")))?;
    }
    if fields.next().is_some() {
        return Err(parse_error(line, format!("expected {N} integers")));
    }
    Ok(out)
}

pub fn parse_graph(text: &str, mode: Mode) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing header `n m`"))?;
    let [n, m] = parse_fields::<2>(header_line, header)?;
    if n == 0 {
        return Err(parse_error(header_line, "graph needs at least one vertex"));
    }
    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let [u, v] = parse_fields::<2>(line, text)?;
        if u >= n || v >= n {
            return Err(parse_error(
                line,
                format!("vertex {} out of range 0..{n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(parse_error(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) && mode == Mode::Strict {
            return Err(parse_error(line, format!("duplicate edge {u} {v}")));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(parse_error(
            last_line,
            format!("header announces {m} edges, found {}", pairs.len()),
        ));
    }
    Ok(Graph::from_edges(n, pairs)?)
}

/// Canonical form: header, then edges `u < v` in sorted order.
pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_vertex_set(text: &str, host_n: usize) -> Result<VertexSet, FormatError> {
    let mut members = Vec::new();
    for (line, text) in content_lines(text) {
        let [v] = parse_fields::<1>(line, text)?;
        if v >= host_n {
            return Err(parse_error(
                line,
                format!("vertex {v} out of range 0..{host_n}"),
            ));
        }
        members.push(v);
    }
    Ok(VertexSet::new(host_n, members)?)
}

pub fn format_vertex_set(s: &VertexSet) -> String {
    s.members().iter().map(|v| format!("{v}\n")).collect()
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), FormatError> {
    fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_graph(path: &Path, mode: Mode) -> Result<Graph, FormatError> {
    parse_graph(&read(path)?, mode)
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<(), FormatError> {
    write(path, &format_graph(g))
}

pub fn read_vertex_set(path: &Path, host_n: usize) -> Result<VertexSet, FormatError> {
    parse_vertex_set(&read(path)?, host_n)
}

pub fn write_vertex_set(s: &VertexSet, path: &Path) -> Result<(), FormatError> {
    write(path, &format_vertex_set(s))
}
