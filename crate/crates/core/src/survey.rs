//! Batch survey over a manifest of graphs: SRG check, primitivity and a
//! search for each pattern, with a per-graph time budget.
//!
//! Manifest lines read `name kind payload`; blank lines and lines starting
//! with `#` are ignored. Kinds:
//!
//! * `graph6` payload is one graph6 string
//! * `graph6-file` payload is a path to a file of graph6 lines (one entry per line)
//! * `latin-file`, `sts-file` payload is a path to a design file
//! * `family` payload is a family spec such as `johnson2:6`
//!
//! Relative paths resolve against the manifest's directory.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::catalog::instance;
use crate::error::{Error, Result};
use crate::families::{latin_square_graph, sts_block_graph};
use crate::formats::{parse_graph6, parse_latin, parse_sts, Finding, ReportRow};
use crate::graph::{cycle, Graph};
use crate::pattern::{find_induced_until, Pattern, PatternName};
use crate::srg::{is_primitive, srg_params};

pub const SURVEY_PATTERNS: [PatternName; 4] = [PatternName::P4, PatternName::P5, PatternName::CoP5, PatternName::Gem];

pub const DEFAULT_TIME_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    Graph6,
    Graph6File,
    LatinFile,
    StsFile,
    Family,
}

impl EntryKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntryKind::Graph6 => "graph6",
            EntryKind::Graph6File => "graph6-file",
            EntryKind::LatinFile => "latin-file",
            EntryKind::StsFile => "sts-file",
            EntryKind::Family => "family",
        }
    }
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EntryKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "graph6" => Ok(EntryKind::Graph6),
            "graph6-file" => Ok(EntryKind::Graph6File),
            "latin-file" => Ok(EntryKind::LatinFile),
            "sts-file" => Ok(EntryKind::StsFile),
            "family" => Ok(EntryKind::Family),
            _ => Err(format!("unknown entry kind '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub kind: EntryKind,
    pub payload: String,
}

/// Parses manifest text. Paths in file entries are resolved against `base`.
pub fn parse_manifest(text: &str, base: Option<&Path>) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |reason: String| Error::Parse { line: i + 1, reason };
        let mut parts = line.split_whitespace();
        let (Some(name), Some(kind), Some(payload), None) = (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(parse_err("expected 'name kind payload'".into()));
        };
        let kind: EntryKind = kind.parse().map_err(parse_err)?;
        let payload = match (kind, base) {
            (EntryKind::Graph6 | EntryKind::Family, _) | (_, None) => payload.to_string(),
            (_, Some(dir)) => dir.join(payload).to_string_lossy().into_owned(),
        };
        out.push(CorpusEntry { name: name.to_string(), kind, payload });
    }
    Ok(out)
}

/// Every primitive SRG on at most 36 vertices that the built-in generators
/// produce, plus C5.
pub fn builtin_manifest() -> Vec<CorpusEntry> {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((4..=9).map(|m| format!("johnson2:{m}")));
    specs.extend((5..=9).map(|m| format!("kneser2:{m}")));
    specs.extend((2..=6).map(|m| format!("hamming2:{m}")));
    specs.extend((3..=6).map(|m| format!("latin:{m}")));
    specs.extend(
        [
            "mols:3",
            "mols:5",
            "sts-skolem:7",
            "sts-bose:9",
            "sts13:1",
            "sts13:2",
            "sts-skolem:13",
            "sts-bose:15",
        ]
        .map(String::from),
    );
    let mut out: Vec<CorpusEntry> = specs
        .into_iter()
        .filter_map(|spec| {
            let inst = instance(&spec).expect("built-in specs are valid");
            (inst.graph.n() <= 36 && is_primitive(&inst.graph).unwrap_or(false)).then(|| CorpusEntry {
                name: inst.name.replace(' ', "_"),
                kind: EntryKind::Family,
                payload: spec,
            })
        })
        .collect();
    out.insert(
        0,
        CorpusEntry { name: "C5".into(), kind: EntryKind::Graph6, payload: crate::formats::write_graph6(&cycle(5)) },
    );
    out
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(PathBuf::from(path)).map_err(|e| Error::Parse { line: 0, reason: format!("{path}: {e}") })
}

/// Loads the graphs of one entry. A graph6 file yields one graph per
/// non-empty line, named `name#1`, `name#2`, ... when it has several.
pub fn load_entry(e: &CorpusEntry) -> Vec<(String, Result<Graph>)> {
    let single = |g: Result<Graph>| vec![(e.name.clone(), g)];
    match e.kind {
        EntryKind::Graph6 => single(parse_graph6(&e.payload)),
        EntryKind::Family => single(instance(&e.payload).map(|i| i.graph)),
        EntryKind::LatinFile => single(read(&e.payload).and_then(|t| parse_latin(&t)).map(|l| latin_square_graph(&l))),
        EntryKind::StsFile => single(read(&e.payload).and_then(|t| parse_sts(&t)).map(|s| sts_block_graph(&s))),
        EntryKind::Graph6File => match read(&e.payload) {
            Err(err) => single(Err(err)),
            Ok(text) => {
                let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
                if lines.len() == 1 {
                    return single(parse_graph6(lines[0]));
                }
                lines.iter().enumerate().map(|(i, l)| (format!("{}#{}", e.name, i + 1), parse_graph6(l))).collect()
            }
        },
    }
}

#[derive(Debug, Clone)]
pub struct SurveyOptions {
    pub patterns: Vec<PatternName>,
    /// Wall-clock cap for all searches on one graph.
    pub time_budget: Duration,
    /// Leave `elapsed_ms` empty so reports are reproducible byte for byte.
    pub record_timing: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions { patterns: SURVEY_PATTERNS.to_vec(), time_budget: DEFAULT_TIME_BUDGET, record_timing: true }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Survey {
    pub rows: Vec<ReportRow>,
    /// Entries that failed to load.
    pub failures: usize,
}

fn witness_labels(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v)).collect()
}

/// Surveys one graph. Patterns left when the budget runs out are skipped.
pub fn survey_graph(name: &str, g: &Graph, opts: &SurveyOptions) -> ReportRow {
    let start = Instant::now();
    let deadline = start + opts.time_budget;
    let params = srg_params(g);
    let primitive = params.and_then(|_| is_primitive(g).ok());
    let mut findings = Vec::new();
    let mut note = params.is_none().then(|| "not strongly regular".to_string());
    for &p in &opts.patterns {
        if note.as_deref() == Some("time budget exceeded") || Instant::now() >= deadline {
            note = Some("time budget exceeded".into());
            findings.push(Finding { pattern: p, found: None, witness: vec![] });
            continue;
        }
        match find_induced_until(g, &Pattern::new(p), Some(deadline)) {
            Ok(o) => findings.push(Finding {
                pattern: p,
                found: Some(o.found),
                witness: o.witness.as_deref().map(|w| witness_labels(g, w)).unwrap_or_default(),
            }),
            Err(_) => {
                note = Some("time budget exceeded".into());
                findings.push(Finding { pattern: p, found: None, witness: vec![] });
            }
        }
    }
    ReportRow {
        graph: name.to_string(),
        n: g.n(),
        params,
        primitive,
        findings,
        elapsed_ms: opts.record_timing.then(|| start.elapsed().as_millis()),
        note,
    }
}

/// Runs the survey; rows follow manifest order whatever the completion order.
pub fn run_survey(entries: &[CorpusEntry], opts: &SurveyOptions) -> Survey {
    let graphs: Vec<(String, Result<Graph>)> = entries.iter().flat_map(load_entry).collect();
    let rows: Vec<ReportRow> = graphs
        .par_iter()
        .map(|(name, g)| match g {
            Ok(g) => survey_graph(name, g, opts),
            Err(e) => ReportRow {
                graph: name.clone(),
                n: 0,
                params: None,
                primitive: None,
                findings: vec![],
                elapsed_ms: None,
                note: Some(format!("load failed: {e}")),
            },
        })
        .collect();
    let failures = graphs.iter().filter(|(_, g)| g.is_err()).count();
    Survey { rows, failures }
}

fn verdict(row: &ReportRow, p: PatternName) -> Option<bool> {
    row.findings.iter().find(|f| f.pattern == p).and_then(|f| f.found)
}

/// Conjecture evidence over primitive rows: graphs without induced co-P5
/// (with their triangle-free status) and graphs without induced P5 (with
/// the complement's lambda). Counterexamples are flagged, never fatal.
pub fn summary(rows: &[ReportRow]) -> String {
    let primitive: Vec<&ReportRow> = rows.iter().filter(|r| r.primitive == Some(true)).collect();
    let mut out = format!("primitive SRGs surveyed: {}\n", primitive.len());
    let mut counterexamples = Vec::new();
    let cop5_free: Vec<String> = primitive
        .iter()
        .filter(|r| verdict(r, PatternName::CoP5) == Some(false))
        .map(|r| {
            let lambda = r.params.map(|p| p.lambda).unwrap_or(0);
            if lambda > 0 {
                counterexamples.push(format!("{} has lambda = {lambda} but no induced co-P5", r.graph));
            }
            format!("{} ({})", r.graph, if lambda == 0 { "triangle-free" } else { "has triangles" })
        })
        .collect();
    let p5_free: Vec<String> = primitive
        .iter()
        .filter(|r| verdict(r, PatternName::P5) == Some(false))
        .map(|r| {
            let co_lambda = r.params.and_then(|p| p.complement().ok()).map(|c| c.lambda).unwrap_or(0);
            if co_lambda > 0 {
                counterexamples.push(format!("{} has complement lambda = {co_lambda} but no induced P5", r.graph));
            }
            format!("{} (complement lambda {co_lambda})", r.graph)
        })
        .collect();
    let skipped = rows.iter().filter(|r| r.findings.iter().any(|f| f.found.is_none())).count();
    out += &format!("co-P5-free: {} [{}]\n", cop5_free.len(), cop5_free.join(", "));
    out += &format!("P5-free: {} [{}]\n", p5_free.len(), p5_free.join(", "));
    out += &format!("graphs with skipped searches: {skipped}\n");
    if counterexamples.is_empty() {
        out += "no counterexamples to the lambda > 0 questions\n";
    } else {
        for c in counterexamples {
            out += &format!("COUNTEREXAMPLE: {c}\n");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_lines() {
        let text = "# comment\n\nc5 graph6 Dhc\nj6 family johnson2:6\nx graph6-file data/x.g6\n";
        let m = parse_manifest(text, Some(Path::new("/tmp/m"))).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m[2].payload, "/tmp/m/data/x.g6");
        assert!(matches!(parse_manifest("a graph6", None), Err(Error::Parse { line: 1, .. })));
        assert!(parse_manifest("a bogus x", None).is_err());
    }

    #[test]
    fn c5_row() {
        let row = survey_graph("C5", &cycle(5), &SurveyOptions::default());
        assert_eq!(verdict(&row, PatternName::P4), Some(true));
        assert_eq!(verdict(&row, PatternName::P5), Some(false));
        assert_eq!(row.primitive, Some(true));
    }

    #[test]
    fn zero_budget_skips() {
        let g = instance("hamming2:9").unwrap().graph;
        let opts = SurveyOptions { time_budget: Duration::ZERO, ..Default::default() };
        let row = survey_graph("H", &g, &opts);
        assert!(row.findings.iter().all(|f| f.found.is_none()));
        assert_eq!(row.note.as_deref(), Some("time budget exceeded"));
    }

    #[test]
    fn builtin_is_primitive_and_small() {
        let m = builtin_manifest();
        assert_eq!(m[0].name, "C5");
        assert!(m.iter().any(|e| e.payload == "sts-bose:15"));
        assert!(!m.iter().any(|e| e.payload == "johnson2:4"));
    }
}
