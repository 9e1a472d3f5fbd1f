//! Exhaustive induced-subgraph search for the small named patterns, and
//! cograph recognition by complement reduction.
//!
//! `find_induced` is the ground truth every constructive procedure is
//! checked against. It scans vertex subsets in lexicographic order, so the
//! first hit is the lexicographically least inducing subset.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cycle, path, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternName {
    P3,
    P4,
    P5,
    #[serde(rename = "COP5")]
    CoP5,
    C5,
    #[serde(rename = "GEM")]
    Gem,
    #[serde(rename = "COGEM")]
    CoGem,
}

impl PatternName {
    pub const ALL: [PatternName; 7] = [
        PatternName::P3,
        PatternName::P4,
        PatternName::P5,
        PatternName::CoP5,
        PatternName::C5,
        PatternName::Gem,
        PatternName::CoGem,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PatternName::P3 => "P3",
            PatternName::P4 => "P4",
            PatternName::P5 => "P5",
            PatternName::CoP5 => "COP5",
            PatternName::C5 => "C5",
            PatternName::Gem => "GEM",
            PatternName::CoGem => "COGEM",
        }
    }

    /// The pattern whose model is the complement of this one's.
    pub fn complement(&self) -> Option<PatternName> {
        match self {
            PatternName::P4 => Some(PatternName::P4),
            PatternName::P5 => Some(PatternName::CoP5),
            PatternName::CoP5 => Some(PatternName::P5),
            PatternName::C5 => Some(PatternName::C5),
            PatternName::Gem => Some(PatternName::CoGem),
            PatternName::CoGem => Some(PatternName::Gem),
            PatternName::P3 => None,
        }
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PatternName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_uppercase().replace(['-', '_'], "").as_str() {
            "P3" => Ok(PatternName::P3),
            "P4" => Ok(PatternName::P4),
            "P5" => Ok(PatternName::P5),
            "COP5" | "HOUSE" => Ok(PatternName::CoP5),
            "C5" => Ok(PatternName::C5),
            "GEM" => Ok(PatternName::Gem),
            "COGEM" => Ok(PatternName::CoGem),
            _ => Err(format!("unknown pattern '{s}'")),
        }
    }
}

/// A named target graph together with the tables used to prune the search.
#[derive(Debug, Clone)]
pub struct Pattern {
    pub name: PatternName,
    pub model: Graph,
    // admissible[j] has bit `mask` set when the labelled j-vertex graph with
    // adjacency bits `mask` embeds as an induced subgraph of the model.
    admissible: Vec<Vec<bool>>,
    min_degree: usize,
    min_codegree: usize,
}

/// Bit position of the pair `(i, j)`, `i < j`, in a prefix mask.
#[inline]
fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

impl Pattern {
    pub fn new(name: PatternName) -> Pattern {
        let model = match name {
            PatternName::P3 => path(3),
            PatternName::P4 => path(4),
            PatternName::P5 => path(5),
            PatternName::CoP5 => path(5).complement(),
            PatternName::C5 => cycle(5),
            PatternName::Gem => {
                let p = path(4);
                Graph::from_edges(5, p.edges().chain((0..4).map(|v| (v, 4)))).expect("gem")
            }
            PatternName::CoGem => Pattern::new(PatternName::Gem).model.complement(),
        };
        Pattern::from_model(name, model)
    }

    fn from_model(name: PatternName, model: Graph) -> Pattern {
        let p = model.n();
        let mut admissible: Vec<Vec<bool>> = (0..=p).map(|j| vec![false; 1 << (j * j.saturating_sub(1) / 2)]).collect();
        let mut image = Vec::with_capacity(p);
        let mut used = vec![false; p];
        mark_embeddings(&model, &mut image, &mut used, &mut admissible);
        let min_degree = (0..p).map(|v| model.degree(v)).min().unwrap_or(0);
        let min_codegree = (0..p).map(|v| p - 1 - model.degree(v)).min().unwrap_or(0);
        Pattern { name, model, admissible, min_degree, min_codegree }
    }

    pub fn size(&self) -> usize {
        self.model.n()
    }

    /// Lexicographically least ordering of `set` whose induced subgraph equals
    /// the model vertex-for-vertex.
    pub fn pattern_order(&self, g: &Graph, set: &[usize]) -> Option<Vec<usize>> {
        if set.len() != self.size() {
            return None;
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let mut order = Vec::with_capacity(sorted.len());
        let mut used = vec![false; sorted.len()];
        self.order_rec(g, &sorted, &mut order, &mut used).then_some(order)
    }

    fn order_rec(&self, g: &Graph, set: &[usize], order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = order.len();
        if i == set.len() {
            return true;
        }
        for (t, &v) in set.iter().enumerate() {
            if used[t] {
                continue;
            }
            if (0..i).all(|j| self.model.has_edge(j, i) == g.has_edge(order[j], v)) {
                used[t] = true;
                order.push(v);
                if self.order_rec(g, set, order, used) {
                    return true;
                }
                order.pop();
                used[t] = false;
            }
        }
        false
    }

    /// Whether `vs`, taken in order, induces exactly the model.
    pub fn matches_in_order(&self, g: &Graph, vs: &[usize]) -> bool {
        vs.len() == self.size()
            && g.check_vertex_list(vs).is_ok()
            && (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| self.model.has_edge(i, j) == g.has_edge(vs[i], vs[j])))
    }
}

fn mark_embeddings(model: &Graph, image: &mut Vec<usize>, used: &mut [bool], admissible: &mut [Vec<bool>]) {
    let j = image.len();
    let mut mask = 0usize;
    for b in 1..j {
        for a in 0..b {
            if model.has_edge(image[a], image[b]) {
                mask |= 1 << pair_bit(a, b);
            }
        }
    }
    admissible[j][mask] = true;
    if j == model.n() {
        return;
    }
    for t in 0..model.n() {
        if !used[t] {
            used[t] = true;
            image.push(t);
            mark_embeddings(model, image, used, admissible);
            image.pop();
            used[t] = false;
        }
    }
}

/// Result of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub found: bool,
    /// Inducing vertices in pattern-vertex order.
    pub witness: Option<Vec<usize>>,
}

impl SearchOutcome {
    fn from_witness(witness: Option<Vec<usize>>) -> Self {
        SearchOutcome { found: witness.is_some(), witness }
    }
}

/// Exhaustive search for an induced copy of `p` in `g`.
pub fn find_induced(g: &Graph, p: &Pattern) -> SearchOutcome {
    find_induced_until(g, p, None).expect("search without a deadline cannot time out")
}

/// As [`find_induced`], giving up with [`Error::TimedOut`] after `deadline`.
///
/// Subsets are sharded by their least vertex; the first shard (in vertex
/// order) that yields a hit wins, which keeps the reported witness the
/// global lexicographic minimum.
pub fn find_induced_until(g: &Graph, p: &Pattern, deadline: Option<Instant>) -> Result<SearchOutcome> {
    let size = p.size();
    let n = g.n();
    if size == 0 {
        return Ok(SearchOutcome::from_witness(Some(Vec::new())));
    }
    if n < size {
        return Ok(SearchOutcome::from_witness(None));
    }
    let eligible: Vec<bool> = (0..n)
        .map(|v| {
            let d = g.degree(v);
            d >= p.min_degree && n - 1 - d >= p.min_codegree
        })
        .collect();
    let hit = (0..=n - size).into_par_iter().find_map_first(|first| {
        if !eligible[first] {
            return None;
        }
        let mut search =
            Search { g, p, eligible: &eligible, chosen: vec![first], deadline, steps: 0, timed_out: false };
        let r = search.extend(0);
        if search.timed_out {
            Some(Err(Error::TimedOut))
        } else {
            r.map(Ok)
        }
    });
    match hit {
        None => Ok(SearchOutcome::from_witness(None)),
        Some(Err(e)) => Err(e),
        Some(Ok(set)) => {
            let order = p.pattern_order(g, &set).expect("an admissible full mask is an induced copy");
            Ok(SearchOutcome::from_witness(Some(order)))
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    p: &'a Pattern,
    eligible: &'a [bool],
    chosen: Vec<usize>,
    deadline: Option<Instant>,
    steps: u64,
    timed_out: bool,
}

impl Search<'_> {
    fn extend(&mut self, mask: usize) -> Option<Vec<usize>> {
        let j = self.chosen.len();
        if j == self.p.size() {
            return Some(self.chosen.clone());
        }
        let n = self.g.n();
        let last = *self.chosen.last().unwrap();
        let remaining = self.p.size() - j;
        for v in last + 1..=n - remaining {
            if !self.eligible[v] {
                continue;
            }
            self.steps += 1;
            if self.steps & 0xFFFF == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() >= d {
                        self.timed_out = true;
                        return None;
                    }
                }
            }
            let mut m = mask;
            for (i, &u) in self.chosen.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    m |= 1 << pair_bit(i, j);
                }
            }
            if !self.p.admissible[j + 1][m] {
                continue;
            }
            self.chosen.push(v);
            let r = self.extend(m);
            self.chosen.pop();
            if r.is_some() || self.timed_out {
                return r;
            }
        }
        None
    }
}

/// Cograph test by recursive complement reduction: every component with at
/// least two vertices must have a disconnected complement whose components
/// are again cographs.
pub fn is_cograph(g: &Graph) -> bool {
    reducible(g, &VertexSet::full(g.n()), false)
}

// `complemented` selects whether adjacency is read from g or its complement.
fn reducible(g: &Graph, set: &VertexSet, complemented: bool) -> bool {
    for comp in components_within(g, set, complemented) {
        if comp.len() < 2 {
            continue;
        }
        let co_parts = components_within(g, &comp, !complemented);
        if co_parts.len() < 2 {
            return false;
        }
        if !co_parts.iter().all(|part| reducible(g, part, complemented)) {
            return false;
        }
    }
    true
}

fn components_within(g: &Graph, set: &VertexSet, complemented: bool) -> Vec<VertexSet> {
    let mut left = set.clone();
    let mut out = Vec::new();
    while let Some(s) = left.first() {
        let mut comp = VertexSet::empty(g.n());
        comp.insert(s);
        left.remove(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let nbrs = g.neighbours(u);
            let reach = if complemented { left.difference(&nbrs) } else { left.intersect(&nbrs) };
            for v in reach.iter() {
                left.remove(v);
                comp.insert(v);
                stack.push(v);
            }
        }
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_multipartite, named_family, FamilyKind};

    #[test]
    fn pattern_models() {
        let p4 = Pattern::new(PatternName::P4);
        assert_eq!(p4.model, path(4));
        let house = Pattern::new(PatternName::CoP5);
        assert_eq!(house.model.edge_count(), 6);
        assert_eq!(house.model.girth(), Some(3));
        assert_eq!(Pattern::new(PatternName::Gem).model.edge_count(), 7);
        assert_eq!(Pattern::new(PatternName::CoGem).model.edge_count(), 3);
        for name in PatternName::ALL {
            assert_eq!(name.as_str().parse::<PatternName>().unwrap(), name);
        }
    }

    #[test]
    fn petersen_and_johnson_facts() {
        let petersen = named_family(FamilyKind::Petersen, 0).unwrap();
        let j5 = named_family(FamilyKind::Johnson2, 5).unwrap();
        assert!(!find_induced(&j5, &Pattern::new(PatternName::P5)).found);
        assert!(!find_induced(&petersen, &Pattern::new(PatternName::CoP5)).found);
        let p5 = Pattern::new(PatternName::P5);
        let hit = find_induced(&petersen, &p5);
        let w = hit.witness.unwrap();
        assert!(p5.matches_in_order(&petersen, &w));
        assert!(petersen.induced_subgraph(&w).unwrap().isomorphic_small(&p5.model).unwrap());
    }

    #[test]
    fn witness_is_lexicographically_least_subset() {
        let g = cycle(7);
        let p = Pattern::new(PatternName::P4);
        let w = find_induced(&g, &p).witness.unwrap();
        assert_eq!(w, vec![0, 1, 2, 3]);
        // brute force: least sorted 4-subset inducing P4
        let mut best = None;
        'outer: for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    for d in c + 1..7 {
                        let s = g.induced_subgraph(&[a, b, c, d]).unwrap();
                        if s.isomorphic_small(&p.model).unwrap() {
                            best = Some(vec![a, b, c, d]);
                            break 'outer;
                        }
                    }
                }
            }
        }
        let mut sorted = w.clone();
        sorted.sort();
        assert_eq!(Some(sorted), best);
    }

    #[test]
    fn cograph_examples() {
        for r in 1..=5 {
            for m in 1..=5 {
                assert!(is_cograph(&complete_multipartite(r, m).unwrap()));
            }
        }
        assert!(!is_cograph(&path(4)));
        assert!(is_cograph(&path(3)));
        let petersen = named_family(FamilyKind::Petersen, 0).unwrap();
        assert!(!is_cograph(&petersen));
        assert!(find_induced(&petersen, &Pattern::new(PatternName::P4)).found);
        assert!(is_cograph(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn deadline_in_the_past_times_out_on_long_searches() {
        let g = named_family(FamilyKind::Hamming2, 12).unwrap().complement();
        let r = find_induced_until(&g, &Pattern::new(PatternName::C5), Some(Instant::now()));
        // the search either finishes before the first clock check or reports a timeout
        assert!(matches!(r, Ok(_) | Err(Error::TimedOut)));
    }
}
