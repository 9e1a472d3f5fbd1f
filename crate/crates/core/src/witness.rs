//! Constructive witnesses: each procedure follows a counting argument that
//! guarantees an induced P4, P5 or co-P5, resolving every free choice by the
//! least index. Outputs are re-checked against the pattern before return.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{
    latin_square_graph, mols_graph, named_family, pair_label, sts_block_graph, FamilyKind, LatinSquare, MolsPair,
    SteinerTripleSystem,
};
use crate::graph::{Graph, VertexSet};
use crate::pattern::{find_induced, Pattern, PatternName};
use crate::srg::{is_primitive, srg_params};

/// Which construction produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// lambda = 0, mu = 1: four consecutive vertices of a shortest cycle.
    MooreCycle,
    /// lambda = 0, mu > 1: extend an induced P3 backwards from u.
    TriangleFree,
    /// lambda > 0, mu <= lambda + 1: extend an induced P3 forwards from w.
    Pigeonhole,
    /// lambda > 0, mu > lambda + 1: the same argument run in the complement.
    Complement,
    /// Fixed vertex labels from a drawn figure.
    Figure,
    /// Greedy cell selection in a Latin square or orthogonal pair.
    Greedy,
    /// Greedy block selection in a triple system.
    Blocks,
    /// Exhaustive search.
    Oracle,
}

impl Branch {
    pub fn tag(&self) -> &'static str {
        match self {
            Branch::MooreCycle => "a",
            Branch::TriangleFree => "b",
            Branch::Pigeonhole => "c",
            Branch::Complement => "d",
            Branch::Figure => "figure",
            Branch::Greedy => "greedy",
            Branch::Blocks => "blocks",
            Branch::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Vertices inducing `pattern`, listed in pattern-vertex order (path order
/// for P4 and P5; for co-P5 the order whose complement is the path).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pattern: PatternName,
    pub vertices: Vec<usize>,
    pub branch: Branch,
}

impl Witness {
    pub fn labels(&self, g: &Graph) -> Vec<String> {
        self.vertices.iter().map(|&v| g.label(v)).collect()
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::ProofViolation(msg.into())
}

/// Checks `vertices` induce the pattern in the given order.
fn validated(g: &Graph, name: PatternName, vertices: Vec<usize>, branch: Branch) -> Result<Witness> {
    let p = Pattern::new(name);
    if !p.matches_in_order(g, &vertices) {
        return Err(violation(format!("{vertices:?} does not induce {name}")));
    }
    Ok(Witness { pattern: name, vertices, branch })
}

/// Puts an unordered vertex set into pattern order, then validates it.
pub(crate) fn validated_set(g: &Graph, name: PatternName, set: &[usize], branch: Branch) -> Result<Witness> {
    let order =
        Pattern::new(name).pattern_order(g, set).ok_or_else(|| violation(format!("{set:?} does not induce {name}")))?;
    validated(g, name, order, branch)
}

fn least(set: &VertexSet, what: &str) -> Result<usize> {
    set.first().ok_or_else(|| violation(format!("no candidate for {what}")))
}

/// Induced P4 in a primitive strongly regular graph, by the case split on
/// `(lambda, mu)`.
pub fn p4_witness(g: &Graph) -> Result<Witness> {
    if !is_primitive(g)? {
        return Err(Error::ImprimitiveInput);
    }
    let p = srg_params(g).expect("primitive graphs are strongly regular");
    let n = g.n();
    let (lambda, mu) = (p.lambda, p.mu);

    if lambda == 0 && mu == 1 {
        let c = g.shortest_cycle().ok_or_else(|| violation("Moore graph without a cycle"))?;
        if c.len() < 5 {
            return Err(violation(format!("Moore graph has a {}-cycle", c.len())));
        }
        return validated(g, PatternName::P4, c[..4].to_vec(), Branch::MooreCycle);
    }

    if mu <= lambda + 1 {
        // u, v in G1(u), w in G2(u) n G1(v): an induced P3
        let u = 0;
        let layers = g.distance_layers(u)?;
        let (g1, g2) = (layers.layer(1), layers.layer(2));
        let v = least(&g1, "v in G1(u)")?;
        let w = least(&g2.intersect(&g.neighbours(v)), "w in G2(u) n G1(v)")?;
        if lambda == 0 {
            let x = least(&g1.difference(&g.neighbours(w)), "x in G1(u) \\ G1(w)")?;
            return validated(g, PatternName::P4, vec![x, u, v, w], Branch::TriangleFree);
        }
        let x = least(&g2.intersect(&g.neighbours(w)).difference(&g.neighbours(v)), "x in (G2(u) n G1(w)) \\ G1(v)")?;
        return validated(g, PatternName::P4, vec![u, v, w, x], Branch::Pigeonhole);
    }

    // mu > lambda + 1 > 1, so lambda > 0 here as well as in the complement argument.
    let (u, w) = g.edges().next().ok_or_else(|| violation("no edge"))?;
    let v = (0..n)
        .find(|&v| v != u && v != w && !g.has_edge(u, v) && !g.has_edge(w, v))
        .ok_or_else(|| violation("no vertex outside N[u] u N[w]"))?;
    let x = least(
        &g.neighbours(u).intersect(&g.neighbours(v)).difference(&g.neighbours(w)),
        "x in (G1(u) n G1(v)) \\ G1(w)",
    )?;
    validated(g, PatternName::P4, vec![w, u, x, v], Branch::Complement)
}

/// Smallest order for which the figure witness exists.
fn figure_threshold(kind: FamilyKind, pattern: PatternName) -> Option<usize> {
    match (kind, pattern) {
        (FamilyKind::Johnson2, PatternName::P5) => Some(6),
        (FamilyKind::Johnson2, PatternName::CoP5) => Some(5),
        (FamilyKind::Hamming2, PatternName::P5 | PatternName::CoP5) => Some(3),
        _ => None,
    }
}

/// The drawn witnesses for `J(m,2)` and `H(2,m)`, located by label in the
/// generated graph.
pub fn explicit_witness(kind: FamilyKind, pattern: PatternName, m: usize) -> Result<Witness> {
    let threshold = figure_threshold(kind, pattern)
        .ok_or_else(|| Error::BadOrder(format!("no figure witness for {pattern} in {kind}")))?;
    if m < threshold {
        return Err(Error::BelowThreshold { pattern, m, threshold });
    }
    let g = named_family(kind, m)?;
    let labels: Vec<(usize, usize)> = match (kind, pattern) {
        (FamilyKind::Johnson2, PatternName::P5) => vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
        // a path in the Kneser graph, hence a co-P5 in its complement
        (FamilyKind::Johnson2, _) => vec![(1, 2), (3, 4), (1, 5), (2, 3), (1, 4)],
        (_, PatternName::P5) => vec![(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)],
        _ => vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)],
    };
    let vertices: Vec<usize> = labels
        .iter()
        .map(|&(a, b)| g.vertex_by_label(&pair_label(a, b)).ok_or_else(|| violation("figure label missing")))
        .collect::<Result<_>>()?;
    validated_set(&g, pattern, &vertices, Branch::Figure)
}

/// Induced P5 in the graph of a Latin square of order at least 5.
///
/// Works on the copy whose first row reads 0..m-1; only symbols are renamed,
/// so cell indices carry back to the input unchanged.
pub fn latin_p5(l: &LatinSquare) -> Result<Witness> {
    let m = l.order();
    if m < 5 {
        return Err(Error::BadOrder(format!("greedy P5 needs a Latin square of order >= 5, got {m}")));
    }
    let s = l.normalized();
    let cell = |r: usize, c: usize| r * m + c;
    let r = (0..m).find(|&r| s.get(r, 1) == 2).expect("symbol 2 occurs in column 1");
    let c = (2..m)
        .find(|&c| !matches!(s.get(r, c), 0 | 1))
        .ok_or_else(|| violation("no fourth cell in the row of symbol 2"))?;
    let sym = s.get(r, c);
    let fifth = (1..m)
        .flat_map(|r2| (2..m).map(move |c2| (r2, c2)))
        .find(|&(r2, c2)| (r2, c2) != (r, c) && s.get(r2, c2) == sym)
        .ok_or_else(|| violation("no fifth cell sharing the fourth cell's symbol"))?;
    let g = latin_square_graph(l);
    validated(
        &g,
        PatternName::P5,
        vec![cell(0, 0), cell(0, 1), cell(r, 1), cell(r, c), cell(fifth.0, fifth.1)],
        Branch::Greedy,
    )
}

/// Induced co-P5 in the graph of a Latin square of order at least 6: the
/// first three cells of row 0 plus the first two cells of a suitable row.
pub fn latin_cop5(l: &LatinSquare) -> Result<Witness> {
    let m = l.order();
    if m < 6 {
        return Err(Error::BadOrder(format!("greedy co-P5 needs a Latin square of order >= 6, got {m}")));
    }
    let s = l.normalized();
    let r = (1..m)
        .find(|&r| !matches!(s.get(r, 0), 1 | 2) && !matches!(s.get(r, 1), 0 | 2))
        .ok_or_else(|| violation("every row is blocked"))?;
    let g = latin_square_graph(l);
    validated_set(&g, PatternName::CoP5, &[0, 1, 2, r * m, r * m + 1], Branch::Greedy)
}

/// Both squares renamed so that row 0 of each reads 0..m-1.
fn normalized_pair(p: &MolsPair) -> (LatinSquare, LatinSquare) {
    (p.first().normalized(), p.second().normalized())
}

/// Induced P5 in the graph of an orthogonal pair of order at least 8.
pub fn mols_p5(p: &MolsPair) -> Result<Witness> {
    let m = p.order();
    if m < 8 {
        return Err(Error::BadOrder(format!("greedy P5 needs orthogonal squares of order >= 8, got {m}")));
    }
    let (a, b) = normalized_pair(p);
    let fresh = |s: usize| s > 1;
    // third vertex: below (0,1) in column 1, with two new symbols
    let r = (1..m)
        .find(|&r| fresh(a.get(r, 1)) && fresh(b.get(r, 1)))
        .ok_or_else(|| violation("no third cell in column 1"))?;
    let c = (2..m)
        .find(|&c| fresh(a.get(r, c)) && fresh(b.get(r, c)))
        .ok_or_else(|| violation("no fourth cell in the third cell's row"))?;
    let (third_a, third_b) = (a.get(r, 1), b.get(r, 1));
    let sym = a.get(r, c);
    let fifth = (1..m)
        .flat_map(|r2| (2..m).map(move |c2| (r2, c2)))
        .find(|&(r2, c2)| {
            (r2, c2) != (r, c) && a.get(r2, c2) == sym && !matches!(b.get(r2, c2), 0 | 1) && b.get(r2, c2) != third_b
        })
        .ok_or_else(|| violation("no fifth cell sharing the fourth cell's first symbol"))?;
    debug_assert_ne!(sym, third_a);
    let g = mols_graph(p);
    validated(&g, PatternName::P5, vec![0, 1, r * m + 1, r * m + c, fifth.0 * m + fifth.1], Branch::Greedy)
}

/// Induced co-P5 in the graph of an orthogonal pair of order at least 10.
pub fn mols_cop5(p: &MolsPair) -> Result<Witness> {
    let m = p.order();
    if m < 10 {
        return Err(Error::BadOrder(format!("greedy co-P5 needs orthogonal squares of order >= 10, got {m}")));
    }
    let (a, b) = normalized_pair(p);
    let r = (1..m)
        .find(|&r| {
            let col0 = [a.get(r, 0), b.get(r, 0)];
            let col1 = [a.get(r, 1), b.get(r, 1)];
            col0.iter().all(|s| !matches!(s, 1 | 2)) && col1.iter().all(|s| !matches!(s, 0 | 2))
        })
        .ok_or_else(|| violation("every row is blocked"))?;
    let g = mols_graph(p);
    validated_set(&g, PatternName::CoP5, &[0, 1, 2, r * m, r * m + 1], Branch::Greedy)
}

fn meets(x: &[usize; 3], y: &[usize; 3]) -> bool {
    x.iter().any(|p| y.contains(p))
}

/// Blocks A, B, C with A-B-C an induced path: A is the first block, B the
/// first block meeting A, C the first block through the least point of
/// B \ A that avoids A.
fn sts_spine(s: &SteinerTripleSystem) -> Option<(usize, usize, usize)> {
    let bl = s.blocks();
    let a = 0;
    let b = (1..bl.len()).find(|&i| meets(&bl[i], &bl[a]))?;
    let pivot = *bl[b].iter().find(|p| !bl[a].contains(p))?;
    let c = (0..bl.len()).find(|&i| i != b && bl[i].contains(&pivot) && !meets(&bl[i], &bl[a]))?;
    Some((a, b, c))
}

fn sts_p5_blocks(s: &SteinerTripleSystem) -> Option<Vec<usize>> {
    let bl = s.blocks();
    let (a, b, c) = sts_spine(s)?;
    let through =
        |i: usize, src: usize, prev: usize| bl[src].iter().any(|p| !bl[prev].contains(p) && bl[i].contains(p));
    let d = (0..bl.len()).find(|&i| i != c && through(i, c, b) && !meets(&bl[i], &bl[a]) && !meets(&bl[i], &bl[b]))?;
    let e = (0..bl.len()).find(|&i| i != d && through(i, d, c) && [a, b, c].iter().all(|&j| !meets(&bl[i], &bl[j])))?;
    Some(vec![a, b, c, d, e])
}

fn sts_threshold(s: &SteinerTripleSystem, pattern: PatternName) -> Result<()> {
    let m = s.order();
    if m < 13 {
        return Err(Error::BelowThreshold { pattern, m, threshold: 13 });
    }
    Ok(())
}

/// Induced P5 in the block-intersection graph of an STS(m), m >= 13.
///
/// The block-by-block construction is guaranteed from m = 19; for m = 13
/// and 15 it is tried first and the exhaustive search covers any failure.
pub fn sts_p5(s: &SteinerTripleSystem) -> Result<Witness> {
    sts_threshold(s, PatternName::P5)?;
    let g = sts_block_graph(s);
    match sts_p5_blocks(s) {
        Some(blocks) => validated(&g, PatternName::P5, blocks, Branch::Blocks),
        None if s.order() < 19 => {
            let w = find_induced(&g, &Pattern::new(PatternName::P5))
                .witness
                .ok_or_else(|| violation("block graph has no induced P5"))?;
            validated(&g, PatternName::P5, w, Branch::Oracle)
        }
        None => Err(violation(format!("block construction failed for m = {}", s.order()))),
    }
}

/// Induced co-P5 in the block-intersection graph of an STS(m), m >= 13.
pub fn sts_cop5(s: &SteinerTripleSystem) -> Result<Witness> {
    sts_threshold(s, PatternName::CoP5)?;
    let bl = s.blocks();
    let (a, b, c) = sts_spine(s).ok_or_else(|| violation("no blocks A, B, C"))?;
    let used: Vec<usize> = [a, b, c].iter().flat_map(|&i| bl[i]).collect();
    let a_only: Vec<usize> = bl[a].iter().copied().filter(|p| !bl[b].contains(p)).collect();
    let c_only: Vec<usize> = bl[c].iter().copied().filter(|p| !bl[b].contains(p)).collect();
    let d = a_only
        .iter()
        .flat_map(|&x| c_only.iter().map(move |&y| (x, y)))
        .filter_map(|(x, y)| s.completion(x, y))
        .filter(|&i| bl[i].iter().any(|p| !used.contains(p)))
        .min()
        .ok_or_else(|| violation("every cross completion stays inside A u B u C"))?;
    let hinge = *bl[a].iter().find(|p| bl[b].contains(p)).expect("A meets B");
    let e = (0..bl.len())
        .find(|&i| i != a && i != b && bl[i].contains(&hinge) && !meets(&bl[i], &bl[c]) && !meets(&bl[i], &bl[d]))
        .ok_or_else(|| violation("no block through the hinge avoiding C and D"))?;
    let g = sts_block_graph(s);
    validated_set(&g, PatternName::CoP5, &[a, b, c, d, e], Branch::Blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bose_sts, complete_multipartite, cyclic_latin, orthogonal_pair, paper_sts13};
    use crate::graph::cycle;

    #[test]
    fn p4_branches() {
        assert_eq!(p4_witness(&complete_multipartite(3, 2).unwrap()), Err(Error::ImprimitiveInput));
        let petersen = named_family(FamilyKind::Petersen, 0).unwrap();
        assert_eq!(p4_witness(&petersen).unwrap().branch, Branch::MooreCycle);
        assert_eq!(p4_witness(&cycle(5)).unwrap().branch, Branch::MooreCycle);
        let j6 = named_family(FamilyKind::Johnson2, 6).unwrap();
        let w = p4_witness(&j6).unwrap();
        assert_eq!(w.branch, Branch::Pigeonhole);
        assert!(Pattern::new(PatternName::P4).matches_in_order(&j6, &w.vertices));
        // K(6,2): (15,6,1,3), mu > lambda + 1
        let k6 = named_family(FamilyKind::Kneser2, 6).unwrap();
        assert_eq!(p4_witness(&k6).unwrap().branch, Branch::Complement);
        // K_{3,3} minus a perfect matching is the 6-cycle: not strongly regular
        assert_eq!(p4_witness(&cycle(6)), Err(Error::NotSrg));
    }

    #[test]
    fn figure_witnesses() {
        let w = explicit_witness(FamilyKind::Johnson2, PatternName::P5, 6).unwrap();
        let g = named_family(FamilyKind::Johnson2, 6).unwrap();
        assert_eq!(w.labels(&g), vec!["12", "23", "34", "45", "56"]);
        let w = explicit_witness(FamilyKind::Hamming2, PatternName::CoP5, 3).unwrap();
        let g = named_family(FamilyKind::Hamming2, 3).unwrap();
        let mut labels = w.labels(&g);
        labels.sort();
        assert_eq!(labels, vec!["00", "01", "02", "10", "11"]);
        assert!(matches!(
            explicit_witness(FamilyKind::Johnson2, PatternName::P5, 5),
            Err(Error::BelowThreshold { threshold: 6, .. })
        ));
    }

    #[test]
    fn latin_witnesses() {
        let l6 = cyclic_latin(6).unwrap();
        let w = latin_p5(&l6).unwrap();
        assert_eq!(w.vertices[..4], [0, 1, 7, 8]);
        let w = latin_cop5(&l6).unwrap();
        let mut cells = w.vertices.clone();
        cells.sort();
        assert_eq!(cells, vec![0, 1, 2, 18, 19]);
        assert!(matches!(latin_p5(&cyclic_latin(4).unwrap()), Err(Error::BadOrder(_))));
        assert!(matches!(latin_cop5(&cyclic_latin(5).unwrap()), Err(Error::BadOrder(_))));
    }

    #[test]
    fn mols_witnesses() {
        assert!(mols_p5(&orthogonal_pair(9).unwrap()).is_ok());
        assert!(mols_cop5(&orthogonal_pair(11).unwrap()).is_ok());
        assert!(matches!(mols_p5(&orthogonal_pair(7).unwrap()), Err(Error::BadOrder(_))));
        assert!(matches!(mols_cop5(&orthogonal_pair(9).unwrap()), Err(Error::BadOrder(_))));
    }

    #[test]
    fn sts13_p5_is_the_published_path() {
        for i in [1, 2] {
            let s = paper_sts13(i).unwrap();
            let w = sts_p5(&s).unwrap();
            let g = sts_block_graph(&s);
            assert_eq!(w.labels(&g), vec!["1 2 3", "1 4 5", "4 6 7", "6 8 9", "8 10 11"]);
            assert_eq!(w.branch, Branch::Blocks);
        }
        assert!(matches!(sts_p5(&bose_sts(9).unwrap()), Err(Error::BelowThreshold { .. })));
    }

    #[test]
    fn sts_cop5_small() {
        for s in [paper_sts13(1).unwrap(), paper_sts13(2).unwrap(), bose_sts(15).unwrap()] {
            let w = sts_cop5(&s).unwrap();
            assert_eq!(w.pattern, PatternName::CoP5);
        }
    }
}
