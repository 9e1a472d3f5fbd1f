//! Text formats: graph6 for graphs, plain grids for Latin squares, block
//! lists for triple systems, and CSV / JSON-lines reports.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{LatinSquare, SteinerTripleSystem};
use crate::graph::{Graph, MAX_VERTICES};
use crate::pattern::PatternName;
use crate::srg::SrgParams;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { offset, reason: reason.into() }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminator are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let mut start = 0;
    let mut bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
        bytes = &bytes[HEADER.len()..];
    }
    if bytes.is_empty() {
        return Err(malformed(start, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=LONG).contains(&b) {
            return Err(malformed(start + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    let (n, mut pos) = if bytes[0] != LONG {
        ((bytes[0] - BIAS) as usize, 1)
    } else if bytes.get(1) != Some(&LONG) {
        if bytes.len() < 4 {
            return Err(malformed(start + bytes.len(), "truncated vertex count"));
        }
        (decode_size(&bytes[1..4]), 4)
    } else {
        if bytes.len() < 8 {
            return Err(malformed(start + bytes.len(), "truncated vertex count"));
        }
        (decode_size(&bytes[2..8]), 8)
    };
    if n > MAX_VERTICES {
        return Err(malformed(start, format!("{n} vertices exceeds the supported maximum {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != expected {
        let at = start + pos + body.len().min(expected);
        return Err(malformed(at, format!("expected {expected} data bytes, found {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'cols;
            }
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            pos += expected - 1;
            return Err(malformed(start + pos, "non-zero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_size(b: &[u8]) -> usize {
    b.iter().fold(0, |acc, &c| (acc << 6) | (c - BIAS) as usize)
}

/// Canonical graph6 encoding without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 0x3f) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + BIAS);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Whitespace-separated rows, one per line. Blank lines are ignored.
pub fn parse_latin(text: &str) -> Result<LatinSquare> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse { line: i + 1, reason: format!("'{t}' is not a symbol") })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push((i + 1, row));
    }
    let m = rows.len();
    if let Some((line, _)) = rows.iter().find(|(_, r)| r.len() != m) {
        return Err(Error::Ragged { line: *line });
    }
    LatinSquare::new(rows.into_iter().map(|(_, r)| r).collect())
}

pub fn write_latin(l: &LatinSquare) -> String {
    let mut out = String::new();
    for row in l.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Header line with the point count, then one block of three 1-based points
/// per line. Lines starting with `#` are comments.
pub fn parse_sts(text: &str) -> Result<SteinerTripleSystem> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, reason: "missing point count".into() })?;
    let m: usize =
        header.parse().map_err(|_| Error::Parse { line: hl, reason: format!("'{header}' is not a point count") })?;
    let mut blocks = Vec::new();
    for (line, l) in lines {
        let pts = l
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse { line, reason: format!("'{t}' is not a point") }))
            .collect::<Result<Vec<_>>>()?;
        let block: [usize; 3] =
            pts.try_into().map_err(|_| Error::Parse { line, reason: "a block needs exactly three points".into() })?;
        blocks.push(block);
    }
    SteinerTripleSystem::new(m, blocks)
}

pub fn write_sts(s: &SteinerTripleSystem) -> String {
    let mut out = format!("{}\n", s.order());
    for b in s.blocks() {
        out.push_str(&SteinerTripleSystem::block_label(b));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    JsonLines,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "jsonl" => Ok(ReportFormat::JsonLines),
            _ => Err(format!("unknown report format '{s}' (expected csv or jsonl)")),
        }
    }
}

/// Search result for one pattern; `found` is `None` when the search was
/// skipped (for instance on a time budget).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub pattern: PatternName,
    pub found: Option<bool>,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub graph: String,
    pub n: usize,
    pub params: Option<SrgParams>,
    pub primitive: Option<bool>,
    pub findings: Vec<Finding>,
    pub elapsed_ms: Option<u128>,
    /// Free-form problem note (parse failure, timeout).
    pub note: Option<String>,
}

const REPORT_HEADER: [&str; 11] =
    ["graph", "n", "k", "lambda", "mu", "primitive", "pattern", "found", "witness", "elapsed_ms", "note"];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Renders rows in input order: CSV with one line per (graph, pattern), or
/// one JSON object per graph.
pub fn emit_report(rows: &[ReportRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::JsonLines => {
            rows.iter().map(|r| serde_json::to_string(r).expect("report rows serialize") + "\n").collect()
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(REPORT_HEADER).expect("in-memory write");
            for r in rows {
                let p = r.params;
                let head = [
                    r.graph.clone(),
                    r.n.to_string(),
                    opt(p.map(|p| p.k)),
                    opt(p.map(|p| p.lambda)),
                    opt(p.map(|p| p.mu)),
                    opt(r.primitive),
                ];
                let tail = [opt(r.elapsed_ms), r.note.clone().unwrap_or_default()];
                if r.findings.is_empty() {
                    let rec: Vec<String> =
                        head.iter().cloned().chain(["".into(), "".into(), "".into()]).chain(tail.clone()).collect();
                    w.write_record(&rec).expect("in-memory write");
                }
                for f in &r.findings {
                    let found = f.found.map(|b| b.to_string()).unwrap_or_else(|| "skipped".into());
                    let rec: Vec<String> = head
                        .iter()
                        .cloned()
                        .chain([f.pattern.to_string(), found, f.witness.join(";")])
                        .chain(tail.clone())
                        .collect();
                    w.write_record(&rec).expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 report")
        }
    }
}
