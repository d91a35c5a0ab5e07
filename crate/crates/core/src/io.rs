//! graph6 and edge-list serialization, corpus files, and JSON records.
//!
//! graph6: one size byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! three bytes carrying `n` in 18 bits. The upper triangle follows column by
//! column, `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into 6-bit
//! groups offset by 63, with zero padding in the last group.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with `u < v` in
//! ascending lexicographic order.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::family::Family;
use crate::graph::{Graph, GraphError};
use crate::identities::{IdentityReport, SuiteSummary};
use crate::polynomial::{BivariatePolynomial, Polynomial};
use crate::vertex_set::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6 byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("corpus line {line}: {source}")]
    Corpus {
        line: usize,
        #[source]
        source: Box<FormatError>,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FormatError {
    pub fn is_capacity(&self) -> bool {
        match self {
            FormatError::Graph(GraphError::Capacity { .. }) => true,
            FormatError::Corpus { source, .. } => source.is_capacity(),
            _ => false,
        }
    }
}

fn g6_err(offset: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Graph6 { offset, reason: reason.into() }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(line: &[u8]) -> Result<Graph, FormatError> {
    for (offset, &b) in line.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(offset, format!("byte 0x{b:02x} is outside the printable range 63..=126")));
        }
    }
    let (n, header) = match line {
        [] => return Err(g6_err(0, "empty input")),
        [126, 126, ..] => return Err(FormatError::Graph(GraphError::Capacity { order: 258048 })),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err(line.len(), "truncated size prefix"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(FormatError::Graph(GraphError::Capacity { order: n }));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let body = &line[header..];
    if body.len() < needed {
        return Err(g6_err(
            line.len(),
            format!("truncated bit stream: expected {needed} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > needed {
        return Err(g6_err(header + needed, "unexpected trailing bytes"));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if bits % 6 != 0 && (bits..needed * 6).any(bit) {
        return Err(g6_err(header + needed - 1, "nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, reason: String| FormatError::EdgeList { line, reason };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header".into()))?;
    let numbers = |line: usize, s: &str| -> Result<(usize, usize), FormatError> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts.as_slice() {
            [a, b] => {
                let a = a.parse().map_err(|_| err(line, format!("`{a}` is not a non-negative integer")))?;
                let b = b.parse().map_err(|_| err(line, format!("`{b}` is not a non-negative integer")))?;
                Ok((a, b))
            }
            _ => Err(err(line, format!("expected two integers, found `{s}`"))),
        }
    };
    let (n, m) = numbers(header_line, header)?;
    if n > MAX_ORDER {
        return Err(FormatError::Graph(GraphError::Capacity { order: n }));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let (u, v) = numbers(line, content)?;
        if u >= n || v >= n {
            return Err(err(line, format!("endpoint of {{{u},{v}}} outside 0..{n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(header_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Reads one graph6 string per line. Blank lines and an optional
/// `>>graph6<<` header are skipped.
pub fn read_graph6_corpus(text: &str) -> Result<Vec<Graph>, FormatError> {
    let mut graphs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line.as_bytes()).map_err(|e| FormatError::Corpus { line: i + 1, source: Box::new(e) })?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFormat {
    Graph6,
    EdgeList,
    Family,
}

/// A parsed graph along with the text it came from.
#[derive(Debug, Clone)]
pub struct GraphDocument {
    pub format: SourceFormat,
    pub graph: Graph,
    pub source: String,
    family: Option<Family>,
}

impl GraphDocument {
    pub fn from_family(expr: &str) -> Result<GraphDocument, FormatError> {
        let family: Family = expr.parse()?;
        let graph = family.build()?;
        Ok(GraphDocument { format: SourceFormat::Family, graph, source: expr.to_string(), family: Some(family) })
    }

    /// Sniffs the format: a first line of two integers is an edge list,
    /// anything else is a single graph6 line.
    pub fn parse(text: &str) -> Result<GraphDocument, FormatError> {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        let looks_like_header = {
            let parts: Vec<&str> = first.split_whitespace().collect();
            parts.len() == 2 && parts.iter().all(|p| p.chars().all(|c| c.is_ascii_digit()))
        };
        if looks_like_header {
            let graph = parse_edge_list(text)?;
            Ok(GraphDocument { format: SourceFormat::EdgeList, graph, source: text.to_string(), family: None })
        } else {
            let line = first.strip_prefix(">>graph6<<").unwrap_or(first);
            let graph = parse_graph6(line.as_bytes())?;
            Ok(GraphDocument { format: SourceFormat::Graph6, graph, source: first.to_string(), family: None })
        }
    }

    /// Canonical serialization in the source format.
    pub fn serialize(&self) -> String {
        match (self.format, &self.family) {
            (SourceFormat::Family, Some(f)) => f.to_string(),
            (SourceFormat::EdgeList, _) => write_edge_list(&self.graph),
            _ => write_graph6(&self.graph),
        }
    }
}

/// One computed polynomial, as emitted by `compute --format json`.
///
/// `coefficients` is an ascending list of decimal strings for univariate
/// polynomials; for `Q` it is a table indexed `[x-degree][y-degree]`.
#[derive(Debug, Clone, Serialize)]
pub struct PolynomialRecord {
    pub graph: String,
    pub polynomial_name: String,
    pub coefficients: serde_json::Value,
    pub method: String,
}

impl PolynomialRecord {
    pub fn univariate(graph: &Graph, name: &str, p: &Polynomial, method: &str) -> Self {
        PolynomialRecord {
            graph: write_graph6(graph),
            polynomial_name: name.to_string(),
            coefficients: serde_json::json!(p.to_decimal_strings()),
            method: method.to_string(),
        }
    }

    pub fn bivariate(graph: &Graph, name: &str, q: &BivariatePolynomial, method: &str) -> Self {
        PolynomialRecord {
            graph: write_graph6(graph),
            polynomial_name: name.to_string(),
            coefficients: serde_json::json!(q.to_decimal_table()),
            method: method.to_string(),
        }
    }
}

/// One identity check, as emitted by `verify --format json`.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRecord {
    pub identity: &'static str,
    pub inputs: Vec<String>,
    pub lhs: Option<Vec<String>>,
    pub rhs: Option<Vec<String>>,
    pub residual: Option<Vec<String>>,
    pub verdict: &'static str,
    pub notes: String,
}

impl From<&IdentityReport> for ReportRecord {
    fn from(r: &IdentityReport) -> Self {
        let dec = |p: &Option<Polynomial>| p.as_ref().map(Polynomial::to_decimal_strings);
        ReportRecord {
            identity: r.kind.tag(),
            inputs: r.inputs.clone(),
            lhs: dec(&r.lhs),
            rhs: dec(&r.rhs),
            residual: dec(&r.residual),
            verdict: r.verdict.as_str(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SummaryRecord<'a> {
    pub summary: &'a SuiteSummary,
}

impl fmt::Display for SourceFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SourceFormat::Graph6 => "graph6",
            SourceFormat::EdgeList => "edge-list",
            SourceFormat::Family => "family",
        })
    }
}
