//! Generators for the graph families and designs studied here, together
//! with their closed-form parameter quadruples.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, StsDefect};
use crate::graph::Graph;
use crate::srg::SrgParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Johnson2,
    Kneser2,
    Hamming2,
    Petersen,
    CompleteMultipartite,
    LatinSquare,
    Mols,
    PseudoLatin,
    StsBlock,
}

impl FamilyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::Johnson2 => "johnson2",
            FamilyKind::Kneser2 => "kneser2",
            FamilyKind::Hamming2 => "hamming2",
            FamilyKind::Petersen => "petersen",
            FamilyKind::CompleteMultipartite => "complete_multipartite",
            FamilyKind::LatinSquare => "latin_square",
            FamilyKind::Mols => "mols",
            FamilyKind::PseudoLatin => "pseudo_latin",
            FamilyKind::StsBlock => "sts_block",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let kind = match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "johnson2" | "johnson" | "triangular" => FamilyKind::Johnson2,
            "kneser2" | "kneser" => FamilyKind::Kneser2,
            "hamming2" | "hamming" | "lattice" => FamilyKind::Hamming2,
            "petersen" => FamilyKind::Petersen,
            "complete_multipartite" | "multipartite" => FamilyKind::CompleteMultipartite,
            "latin_square" | "latin" => FamilyKind::LatinSquare,
            "mols" => FamilyKind::Mols,
            "pseudo_latin" => FamilyKind::PseudoLatin,
            "sts_block" | "sts" => FamilyKind::StsBlock,
            _ => return Err(format!("unknown family '{s}'")),
        };
        Ok(kind)
    }
}

fn bad_order(msg: impl Into<String>) -> Error {
    Error::BadOrder(msg.into())
}

/// Joins two small integers the way the figures write them ("12", "01"),
/// falling back to a comma once a value needs two digits.
pub(crate) fn pair_label(a: usize, b: usize) -> String {
    if a < 10 && b < 10 {
        format!("{a}{b}")
    } else {
        format!("{a},{b}")
    }
}

/// `J(m,2)`, `K(m,2)`, `H(2,m)` or the Petersen graph (which ignores `m`).
pub fn named_family(kind: FamilyKind, m: usize) -> Result<Graph> {
    match kind {
        FamilyKind::Johnson2 | FamilyKind::Kneser2 => {
            if m < 2 {
                return Err(bad_order(format!("{kind} needs m >= 2, got {m}")));
            }
            let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b))).collect();
            let meet =
                |x: (usize, usize), y: (usize, usize)| [x.0, x.1].iter().filter(|p| **p == y.0 || **p == y.1).count();
            let johnson = kind == FamilyKind::Johnson2;
            let g = Graph::from_fn(pairs.len(), |u, v| {
                let shared = meet(pairs[u], pairs[v]);
                if johnson {
                    shared == 1
                } else {
                    shared == 0
                }
            })?;
            g.with_labels(pairs.iter().map(|&(a, b)| pair_label(a, b)).collect())
        }
        FamilyKind::Hamming2 => {
            if m < 1 {
                return Err(bad_order("hamming2 needs m >= 1"));
            }
            let g = Graph::from_fn(m * m, |u, v| (u / m == v / m) != (u % m == v % m))?;
            g.with_labels((0..m * m).map(|v| pair_label(v / m, v % m)).collect())
        }
        FamilyKind::Petersen => named_family(FamilyKind::Kneser2, 5),
        _ => Err(bad_order(format!("{kind} is not a named family"))),
    }
}

/// `K_{r x m}`: `r` groups of `m` vertices, adjacent iff in different groups.
pub fn complete_multipartite(r: usize, m: usize) -> Result<Graph> {
    if r == 0 || m == 0 {
        return Err(bad_order("complete multipartite graph needs r, m >= 1"));
    }
    Graph::from_fn(r * m, |u, v| u / m != v / m)
}

/// Applies the degenerate conventions used by `srg_params` (edgeless graphs
/// have `lambda = mu = 0`, complete graphs `mu = 0`) before validating.
fn conventional(n: i64, k: i64, lambda: i64, mu: i64) -> Result<SrgParams> {
    if n <= 0 || k < 0 || k >= n {
        return Err(bad_order(format!("formula gives no graph: ({n},{k},{lambda},{mu})")));
    }
    if k == 0 {
        return SrgParams::new(n, 0, 0, 0);
    }
    if k == n - 1 {
        return SrgParams::new(n, k, n - 2, 0);
    }
    SrgParams::new(n, k, lambda, mu).map_err(|e| bad_order(e.to_string()))
}

/// Closed-form parameters of a family member.
///
/// Arguments: `[m]` for johnson2, kneser2, hamming2, latin_square, mols and
/// sts_block; `[]` for petersen; `[r, m]` for complete_multipartite;
/// `[t, m]` for pseudo_latin.
pub fn expected_params(kind: FamilyKind, args: &[usize]) -> Result<SrgParams> {
    let arity = match kind {
        FamilyKind::Petersen => 0,
        FamilyKind::CompleteMultipartite | FamilyKind::PseudoLatin => 2,
        _ => 1,
    };
    if args.len() != arity {
        return Err(bad_order(format!("{kind} takes {arity} argument(s), got {}", args.len())));
    }
    let a: Vec<i64> = args.iter().map(|&x| x as i64).collect();
    let pseudo_latin = |t: i64, m: i64| conventional(m * m, (t + 2) * (m - 1), m - 2 + t * (t + 1), (t + 1) * (t + 2));
    match kind {
        FamilyKind::Johnson2 => {
            let m = a[0];
            if m < 4 {
                return Err(bad_order(format!("johnson2 formula needs m >= 4, got {m}")));
            }
            conventional(m * (m - 1) / 2, 2 * (m - 2), m - 2, 4)
        }
        FamilyKind::Kneser2 => {
            let j = expected_params(FamilyKind::Johnson2, args)?;
            j.complement().map_err(|e| bad_order(e.to_string()))
        }
        FamilyKind::Hamming2 => {
            let m = a[0];
            if m < 2 {
                return Err(bad_order(format!("hamming2 formula needs m >= 2, got {m}")));
            }
            conventional(m * m, 2 * (m - 1), m - 2, 2)
        }
        FamilyKind::Petersen => SrgParams::new(10, 3, 0, 1),
        FamilyKind::CompleteMultipartite => {
            let (r, m) = (a[0], a[1]);
            if r < 1 || m < 1 {
                return Err(bad_order("complete multipartite needs r, m >= 1"));
            }
            conventional(r * m, (r - 1) * m, (r - 2) * m, (r - 1) * m)
        }
        FamilyKind::LatinSquare => {
            if a[0] < 2 {
                return Err(bad_order("latin square graph formula needs m >= 2"));
            }
            pseudo_latin(1, a[0])
        }
        FamilyKind::Mols => {
            if a[0] < 3 {
                return Err(bad_order("MOLS graph formula needs m >= 3"));
            }
            pseudo_latin(2, a[0])
        }
        FamilyKind::PseudoLatin => {
            let (t, m) = (a[0], a[1]);
            if t + 1 > m {
                return Err(bad_order(format!("pseudo-Latin graph needs t <= m - 1, got t={t}, m={m}")));
            }
            pseudo_latin(t, m)
        }
        FamilyKind::StsBlock => {
            let m = a[0];
            if m < 3 || (m % 6 != 1 && m % 6 != 3) {
                return Err(bad_order(format!("no Steiner triple system of order {m}")));
            }
            conventional(m * (m - 1) / 6, 3 * (m - 3) / 2, (m + 3) / 2, 9)
        }
    }
}

/// An `m x m` array in which each symbol of `0..m` occurs once per row and column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    m: usize,
    cells: Vec<usize>,
}

impl LatinSquare {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::NotLatin("empty square".into()));
        }
        if let Some(line) = rows.iter().position(|r| r.len() != m) {
            return Err(Error::Ragged { line: line + 1 });
        }
        let cells: Vec<usize> = rows.into_iter().flatten().collect();
        Self::from_cells(m, cells)
    }

    fn from_cells(m: usize, cells: Vec<usize>) -> Result<Self> {
        for r in 0..m {
            let mut seen = vec![false; m];
            for c in 0..m {
                let s = cells[r * m + c];
                if s >= m {
                    return Err(Error::NotLatin(format!("symbol {s} at row {r}, column {c} is out of range")));
                }
                if std::mem::replace(&mut seen[s], true) {
                    return Err(Error::NotLatin(format!("symbol {s} repeats in row {r} (column {c})")));
                }
            }
        }
        for c in 0..m {
            let mut seen = vec![false; m];
            for r in 0..m {
                let s = cells[r * m + c];
                if std::mem::replace(&mut seen[s], true) {
                    return Err(Error::NotLatin(format!("symbol {s} repeats in column {c} (row {r})")));
                }
            }
        }
        Ok(LatinSquare { m, cells })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.m + col]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.m).map(<[usize]>::to_vec).collect()
    }

    /// Copy with symbols renamed so that row 0 reads `0, 1, ..., m-1`.
    pub fn normalized(&self) -> LatinSquare {
        let mut rename = vec![0; self.m];
        for c in 0..self.m {
            rename[self.get(0, c)] = c;
        }
        LatinSquare { m: self.m, cells: self.cells.iter().map(|&s| rename[s]).collect() }
    }
}

/// `cells[i][j] = (i + j) mod m`.
pub fn cyclic_latin(m: usize) -> Result<LatinSquare> {
    if m == 0 {
        return Err(bad_order("Latin square needs m >= 1"));
    }
    LatinSquare::from_cells(m, (0..m * m).map(|x| (x / m + x % m) % m).collect())
}

/// Two Latin squares of the same order whose superposition hits every
/// ordered symbol pair exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolsPair {
    first: LatinSquare,
    second: LatinSquare,
}

impl MolsPair {
    pub fn new(first: LatinSquare, second: LatinSquare) -> Result<Self> {
        let m = first.order();
        if second.order() != m {
            return Err(bad_order("orthogonal squares must have the same order"));
        }
        let mut seen = vec![false; m * m];
        for (&a, &b) in first.cells.iter().zip(&second.cells) {
            if std::mem::replace(&mut seen[a * m + b], true) {
                return Err(Error::NotOrthogonal(a, b));
            }
        }
        Ok(MolsPair { first, second })
    }

    pub fn first(&self) -> &LatinSquare {
        &self.first
    }

    pub fn second(&self) -> &LatinSquare {
        &self.second
    }

    pub fn order(&self) -> usize {
        self.first.order()
    }
}

/// The squares `(i + j) mod m` and `(2i + j) mod m` for odd `m >= 3`.
pub fn orthogonal_pair(m: usize) -> Result<MolsPair> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(bad_order(format!("cyclic orthogonal pair needs odd m >= 3, got {m}")));
    }
    let first = cyclic_latin(m)?;
    let second = LatinSquare::from_cells(m, (0..m * m).map(|x| (2 * (x / m) + x % m) % m).collect())?;
    MolsPair::new(first, second)
}

/// Cells adjacent when they share a row, a column or a symbol.
pub fn latin_square_graph(l: &LatinSquare) -> Graph {
    let m = l.order();
    let g = Graph::from_fn(m * m, |u, v| {
        let (r1, c1, r2, c2) = (u / m, u % m, v / m, v % m);
        r1 == r2 || c1 == c2 || l.get(r1, c1) == l.get(r2, c2)
    })
    .expect("order bounded by graph size cap");
    let labels = (0..m * m).map(|v| format!("({},{}):{}", v / m, v % m, l.get(v / m, v % m))).collect();
    g.with_labels(labels).expect("one label per cell")
}

/// Cells adjacent when they share a row, a column, or a symbol in either square.
pub fn mols_graph(p: &MolsPair) -> Graph {
    let m = p.order();
    let (a, b) = (&p.first, &p.second);
    let g = Graph::from_fn(m * m, |u, v| {
        let (r1, c1, r2, c2) = (u / m, u % m, v / m, v % m);
        r1 == r2 || c1 == c2 || a.get(r1, c1) == a.get(r2, c2) || b.get(r1, c1) == b.get(r2, c2)
    })
    .expect("order bounded by graph size cap");
    let labels = (0..m * m)
        .map(|v| {
            let (r, c) = (v / m, v % m);
            format!("({r},{c}):{},{}", a.get(r, c), b.get(r, c))
        })
        .collect();
    g.with_labels(labels).expect("one label per cell")
}

/// Points `1..=m` and triples covering every pair of points exactly once.
/// Blocks are kept sorted, internally and as a list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SteinerTripleSystem {
    m: usize,
    blocks: Vec<[usize; 3]>,
}

impl SteinerTripleSystem {
    pub fn new(m: usize, blocks: Vec<[usize; 3]>) -> Result<Self> {
        if m % 6 != 1 && m % 6 != 3 {
            return Err(Error::NotSts(StsDefect::Order(m)));
        }
        let mut cover = vec![false; (m + 1) * (m + 1)];
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            let mut t = *b;
            t.sort_unstable();
            if let Some(&p) = t.iter().find(|&&p| p == 0 || p > m) {
                return Err(Error::NotSts(StsDefect::PointOutOfRange { block: i + 1, point: p }));
            }
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::NotSts(StsDefect::DegenerateBlock { block: i + 1 }));
            }
            for (x, y) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                if std::mem::replace(&mut cover[x * (m + 1) + y], true) {
                    return Err(Error::NotSts(StsDefect::DoublyCovered(x, y)));
                }
            }
            sorted.push(t);
        }
        for x in 1..=m {
            for y in x + 1..=m {
                if !cover[x * (m + 1) + y] {
                    return Err(Error::NotSts(StsDefect::Uncovered(x, y)));
                }
            }
        }
        sorted.sort_unstable();
        Ok(SteinerTripleSystem { m, blocks: sorted })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[[usize; 3]] {
        &self.blocks
    }

    pub fn block_label(b: &[usize; 3]) -> String {
        format!("{} {} {}", b[0], b[1], b[2])
    }

    /// Index of the block containing both points.
    pub fn completion(&self, x: usize, y: usize) -> Option<usize> {
        if x == y {
            return None;
        }
        self.blocks.iter().position(|b| b.contains(&x) && b.contains(&y))
    }
}

/// Bose construction for `m = 6n + 3`.
pub fn bose_sts(m: usize) -> Result<SteinerTripleSystem> {
    if m < 3 || m % 6 != 3 {
        return Err(bad_order(format!("Bose construction needs m = 3 mod 6, got {m}")));
    }
    let q = m / 3;
    let half = q.div_ceil(2); // inverse of 2 mod odd q
    let op = |x: usize, y: usize| (x + y) * half % q;
    let pt = |x: usize, i: usize| 1 + x + q * (i % 3);
    let mut blocks = Vec::new();
    for x in 0..q {
        blocks.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..q {
            for y in x + 1..q {
                blocks.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    SteinerTripleSystem::new(m, blocks)
}

/// Skolem construction for `m = 6n + 1`; the extra point is `m`.
pub fn skolem_sts(m: usize) -> Result<SteinerTripleSystem> {
    if m < 7 || m % 6 != 1 {
        return Err(bad_order(format!("Skolem construction needs m = 1 mod 6, m >= 7, got {m}")));
    }
    let n = (m - 1) / 6;
    let q = 2 * n;
    // half-idempotent commutative quasigroup of order 2n
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        s / 2 + n * (s % 2)
    };
    let pt = |x: usize, i: usize| 1 + x + q * (i % 3);
    let inf = m;
    let mut blocks = Vec::new();
    for x in 0..n {
        blocks.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
        for i in 0..3 {
            blocks.push([inf, pt(x + n, i), pt(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..q {
            for y in x + 1..q {
                blocks.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    SteinerTripleSystem::new(m, blocks)
}

const STS13_FIRST: [[usize; 3]; 26] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 11],
    [1, 7, 8],
    [1, 9, 10],
    [1, 12, 13],
    [2, 4, 8],
    [2, 5, 7],
    [2, 6, 10],
    [2, 9, 12],
    [2, 11, 13],
    [3, 4, 11],
    [3, 5, 10],
    [3, 6, 12],
    [3, 7, 9],
    [3, 8, 13],
    [4, 6, 7],
    [4, 9, 13],
    [4, 10, 12],
    [5, 6, 13],
    [5, 8, 12],
    [5, 9, 11],
    [6, 8, 9],
    [7, 10, 13],
    [7, 11, 12],
    [8, 10, 11],
];

const STS13_SECOND: [[usize; 3]; 26] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 11],
    [1, 7, 8],
    [1, 9, 10],
    [1, 12, 13],
    [2, 4, 8],
    [2, 5, 9],
    [2, 6, 10],
    [2, 7, 13],
    [2, 11, 12],
    [3, 4, 11],
    [3, 5, 10],
    [3, 6, 12],
    [3, 7, 9],
    [3, 8, 13],
    [4, 6, 7],
    [4, 9, 12],
    [4, 10, 13],
    [5, 6, 13],
    [5, 7, 11],
    [5, 8, 12],
    [6, 8, 9],
    [7, 10, 12],
    [8, 10, 11],
    [9, 11, 13],
];

/// The two non-isomorphic systems of order 13, as published.
pub fn paper_sts13(index: usize) -> Result<SteinerTripleSystem> {
    let blocks = match index {
        1 => STS13_FIRST,
        2 => STS13_SECOND,
        _ => return Err(Error::BadIndex(index)),
    };
    SteinerTripleSystem::new(13, blocks.to_vec())
}

/// One vertex per block (labelled "a b c"), adjacent when blocks meet.
pub fn sts_block_graph(s: &SteinerTripleSystem) -> Graph {
    let b = s.blocks();
    let g = Graph::from_fn(b.len(), |u, v| b[u].iter().any(|p| b[v].contains(p)))
        .expect("block count bounded by graph size cap");
    g.with_labels(b.iter().map(SteinerTripleSystem::block_label).collect()).expect("one label per block")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};
    use crate::srg::{multipartite_decomposition, srg_params, MultipartiteShape};

    #[test]
    fn named_family_examples() {
        let j4 = named_family(FamilyKind::Johnson2, 4).unwrap();
        assert_eq!(multipartite_decomposition(&j4), Some(MultipartiteShape { r: 3, m: 2 }));
        let k5 = named_family(FamilyKind::Kneser2, 5).unwrap();
        assert_eq!(k5.girth(), Some(5));
        assert_eq!(srg_params(&k5).unwrap().as_tuple(), (10, 3, 0, 1));
        let h2 = named_family(FamilyKind::Hamming2, 2).unwrap();
        assert!(h2.isomorphic_small(&cycle(4)).unwrap());
        assert!(matches!(named_family(FamilyKind::Johnson2, 1), Err(Error::BadOrder(_))));
        assert_eq!(named_family(FamilyKind::Johnson2, 6).unwrap().label(0), "12");
        assert_eq!(named_family(FamilyKind::Hamming2, 3).unwrap().label(5), "12");
    }

    #[test]
    fn kneser_is_johnson_complement() {
        for m in 4..=8 {
            let j = named_family(FamilyKind::Johnson2, m).unwrap();
            let k = named_family(FamilyKind::Kneser2, m).unwrap();
            assert_eq!(k, j.complement());
        }
    }

    #[test]
    fn multipartite_examples() {
        let g = complete_multipartite(3, 2).unwrap();
        assert_eq!(srg_params(&g).unwrap().as_tuple(), (6, 4, 2, 4));
        assert_eq!(complete_multipartite(2, 1).unwrap(), complete(2));
        assert_eq!(complete_multipartite(5, 1).unwrap(), complete(5));
    }

    #[test]
    fn expected_params_examples() {
        let t = |k, a: &[usize]| expected_params(k, a).unwrap().as_tuple();
        assert_eq!(t(FamilyKind::LatinSquare, &[6]), (36, 15, 6, 6));
        assert_eq!(t(FamilyKind::PseudoLatin, &[2, 7]), (49, 24, 11, 12));
        assert_eq!(t(FamilyKind::PseudoLatin, &[2, 7]), t(FamilyKind::Mols, &[7]));
        assert_eq!(t(FamilyKind::StsBlock, &[13]), (26, 15, 8, 9));
        assert_eq!(t(FamilyKind::Johnson2, &[6]), (15, 8, 4, 4));
        assert_eq!(t(FamilyKind::Mols, &[9]), (81, 32, 13, 12));
        assert_eq!(t(FamilyKind::Mols, &[5]), (25, 16, 9, 12));
        assert!(expected_params(FamilyKind::StsBlock, &[11]).is_err());
        assert!(expected_params(FamilyKind::Johnson2, &[3]).is_err());
        assert!(expected_params(FamilyKind::Johnson2, &[3, 4]).is_err());
    }

    #[test]
    fn cyclic_latin_examples() {
        let l = cyclic_latin(6).unwrap();
        for i in 0..6 {
            assert_eq!(l.get(i, 0), i);
        }
        assert_eq!(l.rows()[5], vec![5, 0, 1, 2, 3, 4]);
        assert_eq!(cyclic_latin(1).unwrap().rows(), vec![vec![0]]);
    }

    #[test]
    fn latin_square_validation() {
        assert!(matches!(LatinSquare::new(vec![vec![0, 0], vec![1, 1]]), Err(Error::NotLatin(_))));
        assert!(matches!(LatinSquare::new(vec![vec![0, 1], vec![0, 1]]), Err(Error::NotLatin(_))));
        assert!(matches!(LatinSquare::new(vec![vec![0, 1], vec![1]]), Err(Error::Ragged { line: 2 })));
        let l = LatinSquare::new(vec![vec![2, 0, 1], vec![0, 1, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(l.normalized().rows()[0], vec![0, 1, 2]);
    }

    #[test]
    fn orthogonal_pairs() {
        let p = orthogonal_pair(5).unwrap();
        let mut pairs: Vec<_> = (0..5)
            .flat_map(|r| (0..5).map(move |c| (r, c)))
            .map(|(r, c)| (p.first().get(r, c), p.second().get(r, c)))
            .collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 25);
        assert!(matches!(orthogonal_pair(4), Err(Error::BadOrder(_))));
        assert!(matches!(orthogonal_pair(1), Err(Error::BadOrder(_))));
        let g = mols_graph(&orthogonal_pair(9).unwrap());
        assert_eq!(srg_params(&g).unwrap().as_tuple(), (81, 32, 13, 12));
        assert_eq!(srg_params(&mols_graph(&orthogonal_pair(3).unwrap())).unwrap().as_tuple(), (9, 8, 7, 0));
        let same = cyclic_latin(3).unwrap();
        assert!(matches!(MolsPair::new(same.clone(), same), Err(Error::NotOrthogonal(..))));
    }

    #[test]
    fn latin_square_graphs() {
        let g3 = latin_square_graph(&cyclic_latin(3).unwrap());
        assert_eq!(multipartite_decomposition(&g3), Some(MultipartiteShape { r: 3, m: 3 }));
        assert_eq!(srg_params(&latin_square_graph(&cyclic_latin(6).unwrap())).unwrap().as_tuple(), (36, 15, 6, 6));
        assert_eq!(latin_square_graph(&cyclic_latin(1).unwrap()).n(), 1);
    }

    #[test]
    fn sts_constructions() {
        let s3 = bose_sts(3).unwrap();
        assert_eq!(s3.blocks(), &[[1, 2, 3]]);
        assert_eq!(sts_block_graph(&s3).n(), 1);
        let s9 = sts_block_graph(&bose_sts(9).unwrap());
        assert_eq!(multipartite_decomposition(&s9), Some(MultipartiteShape { r: 4, m: 3 }));
        let s7 = sts_block_graph(&skolem_sts(7).unwrap());
        assert_eq!(s7, complete(7));
        assert_eq!(skolem_sts(13).unwrap().blocks().len(), 26);
        for m in [15, 21, 27, 33] {
            assert_eq!(bose_sts(m).unwrap().blocks().len(), m * (m - 1) / 6);
        }
        for m in [19, 25, 31, 37] {
            assert_eq!(skolem_sts(m).unwrap().blocks().len(), m * (m - 1) / 6);
        }
        assert!(matches!(bose_sts(7), Err(Error::BadOrder(_))));
        assert!(matches!(skolem_sts(9), Err(Error::BadOrder(_))));
    }

    #[test]
    fn published_systems() {
        let a = paper_sts13(1).unwrap();
        for b in [[1, 2, 3], [2, 5, 7], [5, 9, 11]] {
            assert!(a.blocks().contains(&b));
        }
        let b = paper_sts13(2).unwrap();
        for blk in [[2, 5, 9], [9, 11, 13]] {
            assert!(b.blocks().contains(&blk));
        }
        assert_ne!(a, b);
        assert_eq!(paper_sts13(3), Err(Error::BadIndex(3)));
        let g = sts_block_graph(&a);
        assert_eq!(srg_params(&g).unwrap().as_tuple(), (26, 15, 8, 9));
        assert_eq!(g.label(0), "1 2 3");
    }

    #[test]
    fn sts_validation_errors() {
        let dup = vec![[1, 2, 3], [1, 2, 3]];
        assert!(matches!(SteinerTripleSystem::new(3, dup), Err(Error::NotSts(StsDefect::DoublyCovered(1, 2)))));
        assert!(matches!(SteinerTripleSystem::new(7, vec![[1, 2, 3]]), Err(Error::NotSts(StsDefect::Uncovered(1, 4)))));
        assert!(matches!(SteinerTripleSystem::new(5, vec![]), Err(Error::NotSts(StsDefect::Order(5)))));
        assert!(matches!(
            SteinerTripleSystem::new(3, vec![[1, 2, 4]]),
            Err(Error::NotSts(StsDefect::PointOutOfRange { .. }))
        ));
    }
}
