//! Immutable simple graphs over dense vertex indices with bit-vector
//! adjacency rows.
//!
//! A [`Graph`] is built once (from an edge list or a graph6 record) and
//! never mutated afterwards, so it can be shared freely across worker
//! threads. Vertices are the integers `0..n`; every external labelling is
//! mapped to this range by the I/O layer. Each adjacency row is a fixed
//! two-word bitset ([`VertexSet`]), which keeps the hot loops (common
//! neighbour counts, set intersections) branch-free.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices. Two machine words per adjacency
/// row; raise it here (in multiples of 64) if a corpus ever needs more.
pub const MAX_VERTICES: usize = 128;

const WORDS: usize = MAX_VERTICES / 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph on {n} vertices exceeds the supported cap of {cap}")]
    UnsupportedSize { n: usize, cap: usize },
}

/// A set of vertices in `[0, MAX_VERTICES)`, stored as a fixed bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn all_below(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut s = VertexSet::empty();
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for i in 0..WORDS {
            out.words[i] = self.words[i] & other.words[i];
        }
        out
    }

    #[inline]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for i in 0..WORDS {
            out.words[i] = self.words[i] | other.words[i];
        }
        out
    }

    /// Elements of `self` not in `other`.
    #[inline]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for i in 0..WORDS {
            out.words[i] = self.words[i] & !other.words[i];
        }
        out
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        (0..WORDS).any(|i| self.words[i] & other.words[i] != 0)
    }

    /// `|self AND other|` without materialising the intersection.
    #[inline]
    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        (0..WORDS).map(|i| (self.words[i] & other.words[i]).count_ones() as usize).sum()
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        (0..WORDS).all(|i| self.words[i] & !other.words[i] == 0)
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> SetIter {
        SetIter { words: self.words, base: 0 }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = SetIter;
    fn into_iter(self) -> SetIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SetIter {
    words: [u64; WORDS],
    base: usize,
}

impl Iterator for SetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.base < WORDS {
            let w = self.words[self.base];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.base] = w & (w - 1);
                return Some(self.base * 64 + bit);
            }
            self.base += 1;
        }
        None
    }
}

/// An immutable simple graph: no loops, no multi-edges, symmetric
/// adjacency by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::UnsupportedSize { n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, rows: vec![VertexSet::empty(); n] })
    }

    /// Builds a graph from an explicit edge list. Duplicate edges collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// The neighbour set `N(v)` as a bitset row.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Minimum degree; `0` for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Smallest-index vertex of degree `< 3`, if one exists.
    pub fn low_degree_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) < 3)
    }

    /// `|N(u) AND N(v)|` via one row intersection.
    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.rows[u].intersection_count(&self.rows[v])
    }

    #[inline]
    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        self.rows[u].intersection(&self.rows[v])
    }

    /// The subgraph induced by `s`, relabelled onto `0..|s|`, together with
    /// the map from new indices back to the original ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut g = Graph::empty(map.len()).expect("induced subgraph is no larger than its host");
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        (g, map)
    }

    /// BFS distances from `s` inside the vertex set `allowed` (which must
    /// contain `s`). Unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, s: usize, allowed: &VertexSet) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        debug_assert!(allowed.contains(s));
        dist[s] = 0;
        let mut frontier = vec![s];
        let mut next = Vec::new();
        let mut d = 0u32;
        while !frontier.is_empty() {
            d += 1;
            for &u in &frontier {
                for v in self.rows[u].intersection(allowed).iter() {
                    if dist[v] == u32::MAX {
                        dist[v] = d;
                        next.push(v);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
        }
        dist
    }

    /// Whether the graph is connected. Vacuously true for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = VertexSet::all_below(self.n);
        let dist = self.bfs_distances(0, &all);
        dist.iter().all(|&d| d != u32::MAX)
    }

    /// The cycle `C_n` with edges `i -(i+1 mod n)`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::empty(n).expect("cycle order under cap");
        for i in 0..n {
            g.add_edge_unchecked(i, (i + 1) % n);
        }
        g
    }

    /// The path `P_n` on vertices `0..n` in index order.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("path order under cap");
        for i in 1..n {
            g.add_edge_unchecked(i - 1, i);
        }
        g
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("complete graph order under cap");
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("edge list line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses the plain-text edge list format: a header line `n m` followed by
/// `m` lines `u v`.
pub fn from_edge_list_text(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| EdgeListError::Malformed { line: 1, reason: "missing 'n m' header".into() })?;
    let mut it = header.split_whitespace();
    let parse = |tok: Option<&str>, line: usize, what: &str| -> Result<usize, EdgeListError> {
        tok.ok_or_else(|| EdgeListError::Malformed { line: line + 1, reason: format!("missing {what}") })?
            .parse::<usize>()
            .map_err(|_| EdgeListError::Malformed { line: line + 1, reason: format!("bad {what}") })
    };
    let n = parse(it.next(), hline, "vertex count")?;
    let m = parse(it.next(), hline, "edge count")?;
    if it.next().is_some() {
        return Err(EdgeListError::Malformed { line: hline + 1, reason: "trailing tokens after 'n m'".into() });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (eline, line) = lines.next().ok_or_else(|| EdgeListError::Malformed {
            line: hline + 1,
            reason: format!("expected {m} edge lines"),
        })?;
        let mut it = line.split_whitespace();
        let u = parse(it.next(), eline, "edge endpoint")?;
        let v = parse(it.next(), eline, "edge endpoint")?;
        if it.next().is_some() {
            return Err(EdgeListError::Malformed { line: eline + 1, reason: "trailing tokens after 'u v'".into() });
        }
        edges.push((u, v));
    }
    if let Some((eline, _)) = lines.next() {
        return Err(EdgeListError::Malformed { line: eline + 1, reason: "more lines than declared edges".into() });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Renders a graph in the same `n m` / `u v` text format.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_from_edge_list() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.min_degree(), 3);
        assert_eq!(g.low_degree_vertex(), None);
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn c5_edge_list_and_degrees() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g, Graph::cycle(5));
        assert_eq!(g.min_degree(), 2);
        assert_eq!(g.low_degree_vertex(), Some(0));
    }

    #[test]
    fn loops_and_ranges_rejected() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 0)]), Err(GraphError::LoopEdge(0)));
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 7)]),
            Err(GraphError::VertexOutOfRange { vertex: 7, n: 3 })
        );
        assert!(matches!(Graph::empty(MAX_VERTICES + 1), Err(GraphError::UnsupportedSize { .. })));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn empty_graph_min_degree() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(g.min_degree(), 0);
        assert_eq!(g.low_degree_vertex(), None);
        assert!(g.is_connected());
    }

    #[test]
    fn induced_triangle_of_k4() {
        let s: VertexSet = [0usize, 1, 2].into_iter().collect();
        let (h, map) = Graph::complete(4).induced_subgraph(&s);
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn induced_full_set_is_identity() {
        let g = Graph::cycle(7);
        let (h, map) = g.induced_subgraph(&VertexSet::all_below(7));
        assert_eq!(h, g);
        assert_eq!(map, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn vertex_set_iteration_ascending() {
        let s: VertexSet = [5usize, 0, 97, 64, 63].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5, 63, 64, 97]);
        assert_eq!(s.count(), 5);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn edge_list_text_roundtrip() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let text = to_edge_list_text(&g);
        assert_eq!(text, "4 2\n0 1\n2 3\n");
        assert_eq!(from_edge_list_text(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_text_errors() {
        assert!(matches!(from_edge_list_text(""), Err(EdgeListError::Malformed { .. })));
        assert!(matches!(from_edge_list_text("3 1\n0 0\n"), Err(EdgeListError::Graph(GraphError::LoopEdge(0)))));
        assert!(matches!(from_edge_list_text("3 2\n0 1\n"), Err(EdgeListError::Malformed { .. })));
        assert!(matches!(from_edge_list_text("2 x\n"), Err(EdgeListError::Malformed { .. })));
    }

    #[test]
    fn bfs_distances_on_cycle() {
        let g = Graph::cycle(6);
        let d = g.bfs_distances(0, &VertexSet::all_below(6));
        assert_eq!(d, vec![0, 1, 2, 3, 2, 1]);
    }
}
