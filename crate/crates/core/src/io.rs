//! Text formats.
//!
//! Matrix file: a line `N`, then `N` rows of `N` reals, then optionally `T:`
//! followed by `N` reals (on the same line or the next ones).
//!
//! Edge list: a line `N M`, then `M` lines `u v w` with 0-indexed vertices.
//!
//! Pattern file: one ±1 pattern per line.
//!
//! In all three, blank lines and lines starting with `#` are ignored. Parse
//! errors carry the 1-based line number.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::dynamics::SpinState;
use crate::error::{Error, Result};
use crate::graphcut::Graph;
use crate::matrix::Matrix;
use crate::quadform::{Network, RawInstance};

/// Dimension cap for parsed inputs; dense storage beyond it is not useful here.
pub const MAX_PARSE_DIM: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Matrix,
    EdgeList,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Matrix(RawInstance),
    Graph(Graph),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_dim(tok: &str, line: usize, what: &str) -> Result<usize> {
    let v: usize = tok.parse().map_err(|_| Error::parse(line, format!("expected {what}, found `{tok}`")))?;
    if v > MAX_PARSE_DIM {
        return Err(Error::parse(line, format!("{what} {v} exceeds the limit of {MAX_PARSE_DIM}")));
    }
    Ok(v)
}

fn parse_real(tok: &str, line: usize) -> Result<f64> {
    let v: f64 = tok.parse().map_err(|_| Error::parse(line, format!("expected a real number, found `{tok}`")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("non-finite value `{tok}`")));
    }
    Ok(v)
}

/// Decides the format from the first content line: one integer means a matrix
/// file, two integers an edge list.
pub fn detect_format(text: &str) -> Result<Format> {
    let (line, header) = content_lines(text).next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let all_ints = toks.iter().all(|t| t.parse::<usize>().is_ok());
    match (toks.len(), all_ints) {
        (1, true) => Ok(Format::Matrix),
        (2, true) => Ok(Format::EdgeList),
        _ => Err(Error::parse(line, "header must be `N` (matrix) or `N M` (edge list)")),
    }
}

pub fn parse_input(text: &str, format: Option<Format>) -> Result<Input> {
    match format.map_or_else(|| detect_format(text), Ok)? {
        Format::Matrix => parse_matrix(text).map(Input::Matrix),
        Format::EdgeList => parse_edge_list(text).map(Input::Graph),
    }
}

pub fn parse_matrix(text: &str) -> Result<RawInstance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    let n = parse_dim(toks.next().unwrap_or(""), hline, "dimension")?;
    if toks.next().is_some() {
        return Err(Error::parse(hline, "matrix header must be a single integer"));
    }
    if n == 0 {
        return Err(Error::parse(hline, "dimension must be at least 1"));
    }

    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut last_line = hline;
    while rows.len() < n {
        let (line, body) = lines
            .next()
            .ok_or_else(|| Error::parse(last_line, format!("expected {n} matrix rows, found {}", rows.len())))?;
        last_line = line;
        let row = body.split_whitespace().map(|t| parse_real(t, line)).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::parse(line, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }

    let mut t = Vec::new();
    if let Some((line, body)) = lines.next() {
        let rest = body
            .strip_prefix("T:")
            .ok_or_else(|| Error::parse(line, "unexpected content after matrix rows (expected `T:`)"))?;
        last_line = line;
        for tok in rest.split_whitespace() {
            t.push(parse_real(tok, line)?);
        }
        for (line, body) in lines.by_ref() {
            last_line = line;
            for tok in body.split_whitespace() {
                t.push(parse_real(tok, line)?);
            }
            if t.len() >= n {
                break;
            }
        }
        if t.len() != n {
            return Err(Error::parse(last_line, format!("threshold has {} entries, expected {n}", t.len())));
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, "unexpected content after threshold vector"));
        }
    } else {
        t = vec![0.0; n];
    }
    let b = Matrix::from_rows(&rows).map_err(|e| Error::parse(hline, e.to_string()))?;
    RawInstance::new(b, t).map_err(|e| Error::parse(hline, e.to_string()))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::parse(hline, "edge-list header must be `N M`"));
    }
    let n = parse_dim(toks[0], hline, "vertex count")?;
    let m: usize =
        toks[1].parse().map_err(|_| Error::parse(hline, format!("expected edge count, found `{}`", toks[1])))?;
    if n == 0 {
        return Err(Error::parse(hline, "vertex count must be at least 1"));
    }

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = hline;
    for (line, body) in lines.by_ref() {
        last_line = line;
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(line, "edge line must be `u v w`"));
        }
        let u: usize = toks[0].parse().map_err(|_| Error::parse(line, format!("bad vertex `{}`", toks[0])))?;
        let v: usize = toks[1].parse().map_err(|_| Error::parse(line, format!("bad vertex `{}`", toks[1])))?;
        let w = parse_real(toks[2], line)?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(Error::parse(last_line, format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges).map_err(|e| Error::parse(hline, e.to_string()))
}

pub fn parse_patterns(text: &str) -> Result<Vec<SpinState>> {
    let mut out: Vec<SpinState> = Vec::new();
    for (line, body) in content_lines(text) {
        let spins = body
            .split_whitespace()
            .map(|t| match t {
                "1" | "+1" => Ok(1i8),
                "-1" => Ok(-1i8),
                other => Err(Error::parse(line, format!("pattern entries must be ±1, found `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if spins.len() > MAX_PARSE_DIM {
            return Err(Error::parse(line, format!("pattern longer than {MAX_PARSE_DIM}")));
        }
        if let Some(first) = out.first() {
            if first.len() != spins.len() {
                return Err(Error::parse(
                    line,
                    format!("pattern has length {}, expected {}", spins.len(), first.len()),
                ));
            }
        }
        out.push(SpinState::from_signs(spins));
    }
    if out.is_empty() {
        return Err(Error::parse(1, "no patterns found"));
    }
    Ok(out)
}

/// Whitespace-separated reals across all content lines.
pub fn parse_vector(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (line, body) in content_lines(text) {
        for tok in body.split_whitespace() {
            out.push(parse_real(tok, line)?);
            if out.len() > MAX_PARSE_DIM {
                return Err(Error::parse(line, format!("vector longer than {MAX_PARSE_DIM}")));
            }
        }
    }
    if out.is_empty() {
        return Err(Error::parse(1, "no values found"));
    }
    Ok(out)
}

/// Writes a network in matrix-file format; the `T:` line is omitted when `T = 0`.
pub fn write_matrix(net: &Network) -> String {
    write_matrix_parts(net.weights().matrix(), net.threshold())
}

pub fn write_matrix_parts(m: &Matrix, t: &[f64]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", m.dim());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    if t.iter().any(|&v| v != 0.0) {
        let cells: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "T: {}", cells.join(" "));
    }
    out
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edges().len());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.w);
    }
    out
}
