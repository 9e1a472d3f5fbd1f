//! The claim suite: every statement about induced paths in the catalog
//! families, checked at desk scale and reported one row per claim.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{generated_catalog, instance, Design, Instance};
use crate::error::Error;
use crate::families::{
    bose_sts, cyclic_latin, latin_square_graph, named_family, orthogonal_pair, paper_sts13, skolem_sts,
    sts_block_graph, FamilyKind, SteinerTripleSystem,
};
use crate::formats::{parse_graph6, parse_latin, parse_sts, write_graph6, write_latin, write_sts};
use crate::graph::{cycle, Graph};
use crate::pattern::{find_induced, is_cograph, Pattern, PatternName};
use crate::srg::{is_primitive, srg_params};
use crate::witness::{
    explicit_witness, latin_cop5, latin_p5, mols_cop5, mols_p5, p4_witness, sts_cop5, sts_p5, Branch, Witness,
};

pub const STS13_FIXTURES: [&str; 2] =
    [include_str!("../fixtures/sts13-1.txt"), include_str!("../fixtures/sts13-2.txt")];

pub const GROUPS: [&str; 9] =
    ["params", "p4", "cograph", "johnson", "hamming", "latin", "sts", "triangle_free", "roundtrip"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded observation; never fails a run.
    Evidence,
}

impl Status {
    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Evidence => "evidence",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub group: &'static str,
    pub claim: String,
    pub subject: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

#[derive(Debug, Clone)]
pub struct ClaimOptions {
    /// Restrict to one group of [`GROUPS`].
    pub only: Option<String>,
    pub seed: u64,
    pub random_graphs: usize,
    /// Drop one edge from the Petersen graph before checking parameters.
    pub inject_fault: bool,
}

impl Default for ClaimOptions {
    fn default() -> Self {
        ClaimOptions { only: None, seed: 20_211, random_graphs: 10_000, inject_fault: false }
    }
}

struct Recorder {
    group: &'static str,
    claims: Vec<Claim>,
}

impl Recorder {
    fn check(&mut self, claim: &str, subject: &str, expected: impl ToString, observed: impl ToString) {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let status = Status::from_bool(expected == observed);
        self.push(claim, subject, expected, observed, status);
    }

    fn evidence(&mut self, claim: &str, subject: &str, expected: impl ToString, observed: impl ToString) {
        self.push(claim, subject, expected.to_string(), observed.to_string(), Status::Evidence);
    }

    fn push(&mut self, claim: &str, subject: &str, expected: String, observed: String, status: Status) {
        self.claims.push(Claim {
            group: self.group,
            claim: claim.into(),
            subject: subject.into(),
            expected,
            observed,
            status,
        });
    }
}

fn found(g: &Graph, p: PatternName) -> bool {
    find_induced(g, &Pattern::new(p)).found
}

fn outcome(r: &Result<Witness, Error>) -> String {
    match r {
        Ok(w) => format!("{} via {}", w.pattern, w.branch),
        Err(e) => format!("error: {e}"),
    }
}

fn witness_ok(g: &Graph, r: &Result<Witness, Error>, p: PatternName) -> bool {
    r.as_ref().is_ok_and(|w| w.pattern == p && Pattern::new(p).matches_in_order(g, &w.vertices))
}

/// Runs the suite (or one group of it) and returns the rows in a fixed order.
pub fn run_claims(opts: &ClaimOptions) -> Vec<Claim> {
    let catalog = generated_catalog();
    let mut out = Vec::new();
    for group in GROUPS {
        if opts.only.as_deref().is_some_and(|g| g != group) {
            continue;
        }
        let mut rec = Recorder { group, claims: Vec::new() };
        match group {
            "params" => params(&mut rec, &catalog, opts.inject_fault),
            "p4" => p4(&mut rec, &catalog),
            "cograph" => cograph(&mut rec, opts),
            "johnson" => johnson(&mut rec),
            "hamming" => hamming(&mut rec),
            "latin" => latin(&mut rec),
            "sts" => sts(&mut rec),
            "triangle_free" => triangle_free(&mut rec, &catalog),
            "roundtrip" => roundtrip(&mut rec, &catalog),
            _ => unreachable!(),
        }
        out.extend(rec.claims);
    }
    out
}

pub fn all_pass(claims: &[Claim]) -> bool {
    claims.iter().all(|c| c.status != Status::Fail)
}

/// CSV with header `group,claim,subject,expected,observed,status`.
pub fn claims_csv(claims: &[Claim]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["group", "claim", "subject", "expected", "observed", "status"]).expect("in-memory write");
    for c in claims {
        w.write_record([c.group, &c.claim, &c.subject, &c.expected, &c.observed, c.status.as_str()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn claims_jsonl(claims: &[Claim]) -> String {
    claims.iter().map(|c| serde_json::to_string(c).expect("claims serialize") + "\n").collect()
}

fn show(p: Option<crate::srg::SrgParams>) -> String {
    p.map(|p| p.to_string()).unwrap_or_else(|| "not SRG".into())
}

fn params(rec: &mut Recorder, catalog: &[Instance], inject_fault: bool) {
    for inst in catalog {
        let mut g = inst.graph.clone();
        if inject_fault && inst.kind == FamilyKind::Petersen {
            let (u, v) = g.edges().next().expect("Petersen has edges");
            g = g.without_edge(u, v);
        }
        let expected = inst.expected_params().map(|p| p.to_string()).unwrap_or_else(|e| e.to_string());
        rec.check("srg_params equals closed form", &inst.name, expected, show(srg_params(&g)));
    }
}

fn expected_branch(g: &Graph) -> Branch {
    let p = srg_params(g).expect("SRG");
    match (p.lambda, p.mu) {
        (0, 1) => Branch::MooreCycle,
        (0, _) => Branch::TriangleFree,
        (l, m) if m <= l + 1 => Branch::Pigeonhole,
        _ => Branch::Complement,
    }
}

fn p4(rec: &mut Recorder, catalog: &[Instance]) {
    let mut subjects: Vec<(String, Graph)> = catalog.iter().map(|i| (i.name.clone(), i.graph.clone())).collect();
    subjects.push(("C5".into(), cycle(5)));
    for (name, g) in &subjects {
        if !is_primitive(g).unwrap_or(false) {
            continue;
        }
        let r = p4_witness(g);
        let ok = witness_ok(g, &r, PatternName::P4);
        let want = expected_branch(g);
        let observed = match &r {
            Ok(w) if ok => format!("P4 via {}", w.branch),
            _ => outcome(&r),
        };
        rec.check("primitive SRG has constructive induced P4", name, format!("P4 via {want}"), observed);
    }
    for r in 1..=5 {
        for m in 1..=5 {
            let inst = instance(&format!("multipartite:{r}:{m}")).expect("valid");
            let g = &inst.graph;
            rec.check(
                "imprimitive SRG is a cograph without induced P4",
                &inst.name,
                "cograph=true P4=false",
                format!("cograph={} P4={}", is_cograph(g), found(g, PatternName::P4)),
            );
            if r >= 2 {
                rec.check(
                    "p4_witness rejects imprimitive input",
                    &inst.name,
                    "ImprimitiveInput",
                    match p4_witness(g) {
                        Err(Error::ImprimitiveInput) => "ImprimitiveInput".to_string(),
                        other => outcome(&other),
                    },
                );
            }
        }
    }
}

/// Random graph on 1..=10 vertices with a random edge density.
pub fn random_small_graph(rng: &mut impl Rng) -> Graph {
    let n = rng.random_range(1..=10);
    let density: f64 = rng.random_range(0.1..0.9);
    Graph::from_fn(n, |_, _| rng.random_bool(density)).expect("small graph")
}

fn cograph(rec: &mut Recorder, opts: &ClaimOptions) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let p4 = Pattern::new(PatternName::P4);
    let mut mismatches = 0;
    let mut cographs = 0;
    for _ in 0..opts.random_graphs {
        let g = random_small_graph(&mut rng);
        let c = is_cograph(&g);
        cographs += c as usize;
        if c == find_induced(&g, &p4).found {
            mismatches += 1;
        }
    }
    let subject = format!("{} random graphs, seed {}, {} cographs", opts.random_graphs, opts.seed, cographs);
    rec.check(
        "complement reduction agrees with P4 search",
        &subject,
        "0 mismatches",
        format!("{mismatches} mismatches"),
    );
}

fn johnson(rec: &mut Recorder) {
    for m in 3..=8 {
        let g = named_family(FamilyKind::Johnson2, m).expect("valid order");
        let name = format!("J({m},2)");
        rec.check("induced P5 iff m >= 6", &name, m >= 6, found(&g, PatternName::P5));
        rec.check("induced co-P5 iff m >= 5", &name, m >= 5, found(&g, PatternName::CoP5));
        for (p, want) in [(PatternName::P5, "12 23 34 45 56"), (PatternName::CoP5, "12 34 15 23 14")] {
            let r = explicit_witness(FamilyKind::Johnson2, p, m);
            let observed = match &r {
                Ok(w) => w.labels(&g).join(" "),
                Err(Error::BelowThreshold { .. }) => "below threshold".into(),
                Err(e) => e.to_string(),
            };
            let threshold = if p == PatternName::P5 { 6 } else { 5 };
            let expected = if m >= threshold { want } else { "below threshold" };
            rec.check(&format!("figure {p} witness"), &name, expected, observed);
        }
    }
}

fn hamming(rec: &mut Recorder) {
    for m in 2..=6 {
        let g = named_family(FamilyKind::Hamming2, m).expect("valid order");
        let name = format!("H(2,{m})");
        for p in [PatternName::P5, PatternName::CoP5] {
            rec.check(&format!("induced {p} iff m >= 3"), &name, m >= 3, found(&g, p));
            let r = explicit_witness(FamilyKind::Hamming2, p, m);
            if m >= 3 {
                let mut labels = r.as_ref().map(|w| w.labels(&g)).unwrap_or_default();
                labels.sort();
                let want = if p == PatternName::P5 { "00 01 11 12 22" } else { "00 01 02 10 11" };
                let ok = witness_ok(&g, &r, p);
                rec.check(
                    &format!("figure {p} witness"),
                    &name,
                    format!("{want} valid"),
                    format!("{} {}", labels.join(" "), if ok { "valid" } else { "invalid" }),
                );
            } else {
                rec.check(
                    &format!("figure {p} witness"),
                    &name,
                    "below threshold",
                    match r {
                        Err(Error::BelowThreshold { .. }) => "below threshold".to_string(),
                        other => outcome(&other),
                    },
                );
            }
        }
    }
}

fn confirm(rec: &mut Recorder, claim: &str, name: &str, g: &Graph, r: Result<Witness, Error>, p: PatternName) {
    let ok = witness_ok(g, &r, p);
    let oracle = found(g, p);
    rec.check(
        claim,
        name,
        format!("{p} valid, oracle found"),
        format!("{p} {}, oracle {}", if ok { "valid" } else { "invalid" }, if oracle { "found" } else { "not found" }),
    );
}

fn latin(rec: &mut Recorder) {
    for m in 5..=12 {
        let l = cyclic_latin(m).expect("valid order");
        let g = latin_square_graph(&l);
        confirm(
            rec,
            "greedy induced P5 in Latin square graph",
            &format!("cyclic {m}"),
            &g,
            latin_p5(&l),
            PatternName::P5,
        );
        if m >= 6 {
            confirm(
                rec,
                "greedy induced co-P5 in Latin square graph",
                &format!("cyclic {m}"),
                &g,
                latin_cop5(&l),
                PatternName::CoP5,
            );
        }
    }
    for m in [9, 11] {
        let inst = instance(&format!("mols:{m}")).expect("odd order");
        let Some(Design::Mols(p)) = &inst.design else { unreachable!() };
        confirm(rec, "greedy induced P5 in MOLS graph", &inst.name, &inst.graph, mols_p5(p), PatternName::P5);
    }
    for m in [11, 13] {
        let inst = instance(&format!("mols:{m}")).expect("odd order");
        let Some(Design::Mols(p)) = &inst.design else { unreachable!() };
        confirm(rec, "greedy induced co-P5 in MOLS graph", &inst.name, &inst.graph, mols_cop5(p), PatternName::CoP5);
    }
    let g = latin_square_graph(&cyclic_latin(6).expect("order 6"));
    let cells = |cs: &[(usize, usize)]| cs.iter().map(|&(r, c)| r * 6 + c).collect::<Vec<_>>();
    let path = cells(&[(0, 0), (0, 1), (1, 1), (1, 2), (5, 4)]);
    rec.check(
        "highlighted cells induce P5",
        "cyclic 6",
        true,
        Pattern::new(PatternName::P5).matches_in_order(&g, &path),
    );
    let house = cells(&[(0, 0), (0, 1), (0, 2), (3, 0), (3, 1)]);
    rec.check(
        "highlighted cells induce co-P5",
        "cyclic 6",
        true,
        Pattern::new(PatternName::CoP5).pattern_order(&g, &house).is_some(),
    );
    rec.check(
        "latin_p5 rejects order 4",
        "cyclic 4",
        "bad order",
        match latin_p5(&cyclic_latin(4).expect("order 4")) {
            Err(Error::BadOrder(_)) => "bad order".to_string(),
            other => outcome(&other),
        },
    );
    rec.check(
        "mols_p5 rejects order 7",
        "MOLSG(7)",
        "bad order",
        match mols_p5(&orthogonal_pair(7).expect("odd")) {
            Err(Error::BadOrder(_)) => "bad order".to_string(),
            other => outcome(&other),
        },
    );
}

fn sts(rec: &mut Recorder) {
    let systems: Vec<(String, SteinerTripleSystem)> = vec![
        ("STS(13)#1".into(), paper_sts13(1).expect("fixture")),
        ("STS(13)#2".into(), paper_sts13(2).expect("fixture")),
        ("STS-bose(15)".into(), bose_sts(15).expect("valid")),
        ("STS-skolem(19)".into(), skolem_sts(19).expect("valid")),
        ("STS-bose(21)".into(), bose_sts(21).expect("valid")),
        ("STS-skolem(25)".into(), skolem_sts(25).expect("valid")),
        ("STS-bose(27)".into(), bose_sts(27).expect("valid")),
    ];
    for (name, s) in &systems {
        let g = sts_block_graph(s);
        confirm(rec, "constructive induced P5 in block graph", name, &g, sts_p5(s), PatternName::P5);
        confirm(rec, "constructive induced co-P5 in block graph", name, &g, sts_cop5(s), PatternName::CoP5);
    }
    let published = ["1 2 3", "1 4 5", "4 6 7", "6 8 9", "8 10 11"];
    for (name, s) in &systems[..2] {
        let g = sts_block_graph(s);
        let vs: Vec<usize> = published.iter().filter_map(|l| g.vertex_by_label(l)).collect();
        rec.check(
            "published blocks induce P5 in path order",
            name,
            true,
            Pattern::new(PatternName::P5).matches_in_order(&g, &vs),
        );
        let w = sts_p5(s).map(|w| w.labels(&g).join(",")).unwrap_or_else(|e| e.to_string());
        rec.check("sts_p5 returns the published path", name, published.join(","), w);
    }
    // The printed co-P5 list for STS(13) has seven intersecting pairs.
    let g = sts_block_graph(&systems[0].1);
    let printed = ["1 2 3", "1 4 5", "1 9 10", "2 4 8", "4 6 7"];
    let vs: Vec<usize> = printed.iter().filter_map(|l| g.vertex_by_label(l)).collect();
    let edges = g.induced_subgraph(&vs).map(|h| h.edge_count()).unwrap_or(0);
    let house = Pattern::new(PatternName::CoP5).pattern_order(&g, &vs).is_some();
    rec.evidence("printed co-P5 block list", &systems[0].0, "6 edges, co-P5", format!("{edges} edges, co-P5={house}"));

    for (name, s) in [
        ("STS-bose(3)", bose_sts(3).expect("valid")),
        ("STS-skolem(7)", skolem_sts(7).expect("valid")),
        ("STS-bose(9)", bose_sts(9).expect("valid")),
    ] {
        let g = sts_block_graph(&s);
        rec.check(
            "small block graph is P5-free and co-P5-free",
            name,
            "P5=false COP5=false",
            format!("P5={} COP5={}", found(&g, PatternName::P5), found(&g, PatternName::CoP5)),
        );
        rec.check(
            "constructive P5 reports below threshold",
            name,
            "below threshold",
            match sts_p5(&s) {
                Err(Error::BelowThreshold { .. }) => "below threshold".to_string(),
                other => outcome(&other),
            },
        );
    }
}

fn triangle_free(rec: &mut Recorder, catalog: &[Instance]) {
    let petersen = named_family(FamilyKind::Petersen, 0).expect("Petersen");
    rec.check(
        "Petersen has induced P5, no co-P5",
        "Petersen",
        "P5=true COP5=false",
        format!("P5={} COP5={}", found(&petersen, PatternName::P5), found(&petersen, PatternName::CoP5)),
    );
    let c5 = cycle(5);
    rec.check(
        "C5 has neither P5 nor co-P5",
        "C5",
        "P5=false COP5=false",
        format!("P5={} COP5={}", found(&c5, PatternName::P5), found(&c5, PatternName::CoP5)),
    );
    let mut subjects: Vec<(String, &Graph)> = catalog.iter().map(|i| (i.name.clone(), &i.graph)).collect();
    subjects.push(("C5".into(), &c5));
    let mut cop5_free = Vec::new();
    let mut p5_free = Vec::new();
    for (name, g) in subjects {
        if !is_primitive(g).unwrap_or(false) {
            continue;
        }
        let lambda = srg_params(g).expect("SRG").lambda;
        if !found(g, PatternName::CoP5) {
            cop5_free.push(format!("{name}{}", if lambda == 0 { "" } else { "[has triangles]" }));
        }
        if !found(g, PatternName::P5) {
            p5_free.push(name);
        }
    }
    let counter = cop5_free.iter().filter(|s| s.contains("[has triangles]")).count();
    rec.evidence(
        "co-P5-free primitive SRGs are triangle-free",
        "generated catalog",
        "0 with triangles",
        format!("{counter} with triangles among [{}]", cop5_free.join(" ")),
    );
    rec.evidence("P5-free primitive SRGs", "generated catalog", "[C5]", format!("[{}]", p5_free.join(" ")));
}

fn roundtrip(rec: &mut Recorder, catalog: &[Instance]) {
    let mut bad = Vec::new();
    for inst in catalog {
        let text = write_graph6(&inst.graph);
        let back = parse_graph6(&text);
        if back.as_ref().ok() != Some(&inst.graph) || back.map(|g| write_graph6(&g)).ok().as_deref() != Some(&text) {
            bad.push(inst.name.clone());
        }
        match &inst.design {
            Some(Design::Latin(l)) if parse_latin(&write_latin(l)).ok().as_ref() != Some(l) => {
                bad.push(inst.name.clone())
            }
            Some(Design::Mols(p))
                if parse_latin(&write_latin(p.first())).ok().as_ref() != Some(p.first())
                    || parse_latin(&write_latin(p.second())).ok().as_ref() != Some(p.second()) =>
            {
                bad.push(inst.name.clone())
            }
            Some(Design::Sts(s)) if parse_sts(&write_sts(s)).ok().as_ref() != Some(s) => bad.push(inst.name.clone()),
            _ => {}
        }
    }
    for m in 1..=12 {
        let l = cyclic_latin(m).expect("valid");
        if parse_latin(&write_latin(&l)).ok() != Some(l) {
            bad.push(format!("cyclic {m}"));
        }
    }
    rec.check(
        "graph6 / Latin / STS round trips",
        &format!("{} catalog entries", catalog.len()),
        "[]",
        format!("[{}]", bad.join(" ")),
    );
    for (i, text) in STS13_FIXTURES.iter().enumerate() {
        let parsed = parse_sts(text);
        let observed = match &parsed {
            Ok(s) if Ok(s) == paper_sts13(i + 1).as_ref() => "valid, equal".to_string(),
            Ok(_) => "valid, different".to_string(),
            Err(e) => e.to_string(),
        };
        rec.check(
            "fixture file loads and equals built-in system",
            &format!("sts13-{}.txt", i + 1),
            "valid, equal",
            observed,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_filter() {
        let opts = ClaimOptions { only: Some("johnson".into()), ..Default::default() };
        let claims = run_claims(&opts);
        assert!(!claims.is_empty());
        assert!(claims.iter().all(|c| c.group == "johnson"));
        assert!(all_pass(&claims));
    }

    #[test]
    fn injected_fault_fails() {
        let opts = ClaimOptions { only: Some("params".into()), inject_fault: true, ..Default::default() };
        let claims = run_claims(&opts);
        assert!(!all_pass(&claims));
        assert_eq!(claims.iter().filter(|c| c.status == Status::Fail).count(), 1);
    }
}
