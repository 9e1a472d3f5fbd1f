//! Immutable simple graphs stored as symmetric bitset adjacency rows.
//!
//! Vertices are `0..n`. Optional labels carry domain names (pairs, cells,
//! blocks) for reporting and never take part in equality or any query.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 4096;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A set of vertices backed by a fixed-width bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    n: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { words: vec![0; words_for(n)], n }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_words(words: &[u64], n: usize) -> Self {
        VertexSet { words: words.to_vec(), n }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / WORD] &= !(1 << (v % WORD));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        VertexSet { words, n: self.n }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        VertexSet { words, n: self.n }
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Vertices at each distance from a source, plus those it cannot reach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceLayers {
    pub source: usize,
    pub layers: Vec<VertexSet>,
    pub unreachable: VertexSet,
}

impl DistanceLayers {
    /// `G_i(source)`, empty when `i` is past the eccentricity.
    pub fn layer(&self, i: usize) -> VertexSet {
        self.layers.get(i).cloned().unwrap_or_else(|| VertexSet::empty(self.unreachable.n))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(VertexSet::len).collect()
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge(n));
        }
        let stride = words_for(n);
        Ok(Graph { n, stride, adj: vec![0; stride * n], labels: None })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u != v {
                g.set(u, v);
                g.set(v, u);
            }
        }
        Ok(g)
    }

    /// Builds a graph by asking `adjacent(u, v)` for each pair `u < v`.
    pub fn from_fn<F>(n: usize, mut adjacent: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set(u, v);
                    g.set(v, u);
                }
            }
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelMismatch { labels: labels.len(), n: self.n });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.stride + v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    fn unset(&mut self, u: usize, v: usize) {
        self.adj[u * self.stride + v / WORD] &= !(1 << (v % WORD));
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label, or its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Index of the vertex carrying `label`.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.stride..(u + 1) * self.stride]
    }

    pub fn neighbours(&self, u: usize) -> VertexSet {
        VertexSet::from_words(self.row(u), self.n)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbours(u).iter().filter(move |&v| v > u).map(move |v| (u, v)).collect::<Vec<_>>()
        })
    }

    /// Copy of the graph with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.unset(u, v);
        g.unset(v, u);
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    if self.has_edge(u, v) {
                        g.unset(u, v);
                    } else {
                        g.set(u, v);
                    }
                }
            }
        }
        g
    }

    /// Subgraph induced on `vs`, with vertex `i` of the result being `vs[i]`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        self.check_vertex_list(vs)?;
        let mut g = Graph::from_fn(vs.len(), |i, j| self.has_edge(vs[i], vs[j]))?;
        if let Some(labels) = &self.labels {
            g.labels = Some(vs.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    pub fn check_vertex_list(&self, vs: &[usize]) -> Result<()> {
        let mut seen = VertexSet::empty(self.n);
        for &v in vs {
            self.check_vertex(v)?;
            if seen.contains(v) {
                return Err(Error::DuplicateVertex(v));
            }
            seen.insert(v);
        }
        Ok(())
    }

    pub fn distance_layers(&self, source: usize) -> Result<DistanceLayers> {
        self.check_vertex(source)?;
        let mut seen = VertexSet::empty(self.n);
        seen.insert(source);
        let mut frontier = VertexSet::empty(self.n);
        frontier.insert(source);
        let mut layers = Vec::new();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for u in frontier.iter() {
                for (w, r) in next.words.iter_mut().zip(self.row(u)) {
                    *w |= r;
                }
            }
            let next = next.difference(&seen);
            for v in next.iter() {
                seen.insert(v);
            }
            layers.push(frontier);
            frontier = next;
        }
        let unreachable = VertexSet::full(self.n).difference(&seen);
        Ok(DistanceLayers { source, layers, unreachable })
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbours(u).iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// A shortest cycle as a vertex sequence, or `None` if the graph is a forest.
    ///
    /// Sources are scanned in increasing order and only strictly shorter
    /// cycles replace the current best, so the result is deterministic.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            let mut closing: Option<(usize, usize, usize)> = None; // (len, x, y)
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(x) = queue.pop_front() {
                let bound = closing.map(|c| c.0).or(best.as_ref().map(Vec::len));
                if bound.is_some_and(|b| 2 * dist[x] + 1 >= b) {
                    break;
                }
                for y in self.neighbours(x).iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        if bound.is_none_or(|b| len < b) {
                            closing = Some((len, x, y));
                            if len == 2 * dist[x] + 1 {
                                break 'bfs;
                            }
                        }
                    }
                }
            }
            if let Some((len, x, y)) = closing {
                // A closed walk of minimum length is always a simple cycle.
                let mut left = vec![x];
                while *left.last().unwrap() != s {
                    left.push(parent[*left.last().unwrap()]);
                }
                let mut right = vec![y];
                while *right.last().unwrap() != s {
                    right.push(parent[*right.last().unwrap()]);
                }
                right.pop();
                left.reverse();
                left.extend(right);
                debug_assert_eq!(left.len(), len);
                let done = len == 3;
                best = Some(left);
                if done {
                    break;
                }
            }
        }
        best
    }

    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// Whether an adjacency-preserving bijection to `other` exists.
    /// Both graphs must have at most 8 vertices.
    pub fn isomorphic_small(&self, other: &Graph) -> Result<bool> {
        Ok(self.isomorphism_small(other)?.is_some())
    }

    /// Lexicographically least bijection `phi` (as `phi[v]` for `v` in `self`)
    /// with `self.has_edge(u, v) == other.has_edge(phi[u], phi[v])`.
    pub fn isomorphism_small(&self, other: &Graph) -> Result<Option<Vec<usize>>> {
        for g in [self, other] {
            if g.n > 8 {
                return Err(Error::TooLarge(g.n));
            }
        }
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(None);
        }
        let mut da: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return Ok(None);
        }
        let mut phi = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        Ok(extend_map(self, other, &mut phi, &mut used).then_some(phi))
    }
}

fn extend_map(a: &Graph, b: &Graph, phi: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let v = phi.len();
    if v == a.n {
        return true;
    }
    for t in 0..b.n {
        if used[t] || a.degree(v) != b.degree(t) {
            continue;
        }
        if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(phi[u], t)) {
            used[t] = true;
            phi.push(t);
            if extend_map(a, b, phi, used) {
                return true;
            }
            phi.pop();
            used[t] = false;
        }
    }
    false
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("small path")
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("small cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true).expect("complete graph within size cap")
}

/// Disjoint union, vertices of `b` shifted by `a.n()`. Labels are dropped.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.n();
    Graph::from_edges(a.n() + b.n(), a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))))
        .expect("union within size cap")
}
