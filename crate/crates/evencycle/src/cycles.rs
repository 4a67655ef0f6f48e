//! Fixed-length cycle search, induced-path search, and the brute-force
//! enumeration oracles they are checked against.
//!
//! Every search iterates vertices and neighbours in ascending index order
//! and returns the first witness found, so identical inputs always produce
//! identical witnesses. Returned [`Cycle`]s and [`Path`]s are re-validated
//! against the graph on construction.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded, DEFAULT_HOLE_CAP};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeated")]
    Repeated(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertices {0} and {1} are consecutive but not adjacent")]
    MissingEdge(usize, usize),
}

/// A cycle `v_0 v_1 .. v_{k-1} v_0`, validated against a host graph on
/// construction: all vertices distinct, consecutive pairs (and the wrap
/// pair) adjacent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Cycle {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Cycle, SequenceError> {
        if verts.len() < 3 {
            return Err(SequenceError::TooShort(verts.len()));
        }
        check_distinct_in_range(g, &verts)?;
        for i in 0..verts.len() {
            let (u, v) = (verts[i], verts[(i + 1) % verts.len()]);
            if !g.has_edge(u, v) {
                return Err(SequenceError::MissingEdge(u, v));
            }
        }
        Ok(Cycle { verts })
    }

    /// Length of the cycle (= number of vertices = number of edges).
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.verts.iter().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    /// True when this cycle is valid in `g` (used to re-check cycles that
    /// crossed an API boundary).
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        Cycle::new(g, self.verts.clone()).is_ok()
    }

    /// Canonical form: rotate so the minimum vertex comes first, then pick
    /// the direction with the lexicographically smaller second element.
    pub fn canonical(&self) -> Cycle {
        let k = self.verts.len();
        let pos = self
            .verts
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .expect("cycle is nonempty");
        let fwd: Vec<usize> = (0..k).map(|i| self.verts[(pos + i) % k]).collect();
        let mut rev = fwd.clone();
        rev[1..].reverse();
        if rev < fwd {
            Cycle { verts: rev }
        } else {
            Cycle { verts: fwd }
        }
    }

    /// Whether the cycle is chordless in `g`, assuming it is valid there.
    fn chordless_in(&self, g: &Graph) -> bool {
        let k = self.verts.len();
        for i in 0..k {
            for j in (i + 1)..k {
                let consecutive = j - i == 1 || (i == 0 && j == k - 1);
                if !consecutive && g.has_edge(self.verts[i], self.verts[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// A path `v_0 .. v_{t}`, validated on construction; its length is the
/// number of edges, `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    verts: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Path, SequenceError> {
        if verts.is_empty() {
            return Err(SequenceError::TooShort(0));
        }
        check_distinct_in_range(g, &verts)?;
        for w in verts.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(SequenceError::MissingEdge(w[0], w[1]));
            }
        }
        Ok(Path { verts })
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.verts.len()
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.verts.iter().copied().collect()
    }

    /// Whether consecutive pairs are the only adjacent pairs in `g`.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let k = self.verts.len();
        for i in 0..k {
            for j in (i + 1)..k {
                if g.has_edge(self.verts[i], self.verts[j]) != (j - i == 1) {
                    return false;
                }
            }
        }
        self.is_valid_in(g)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        Path::new(g, self.verts.clone()).is_ok()
    }
}

fn check_distinct_in_range(g: &Graph, verts: &[usize]) -> Result<(), SequenceError> {
    let mut seen = VertexSet::empty();
    for &v in verts {
        if v >= g.n() {
            return Err(SequenceError::OutOfRange { vertex: v, n: g.n() });
        }
        if seen.contains(v) {
            return Err(SequenceError::Repeated(v));
        }
        seen.insert(v);
    }
    Ok(())
}

/// Finds a cycle of length exactly `k`, or `None`.
///
/// `k = 4` goes through a common-neighbour counting kernel (a 4-cycle
/// through `u` and `v` exists iff the pair has two common neighbours);
/// other lengths run a depth-first search rooted at each vertex in
/// ascending order, restricted to larger-indexed vertices and pruned by
/// breadth-first distance back to the root.
pub fn find_cycle_of_length(g: &Graph, k: usize) -> Option<Cycle> {
    assert!(k >= 3, "cycles have length at least 3");
    if k > g.n() {
        return None;
    }
    if k == 4 {
        return find_c4(g);
    }
    let n = g.n();
    for s in 0..=(n - k) {
        let mut allowed = VertexSet::empty();
        allowed.insert(s);
        for v in (s + 1)..n {
            allowed.insert(v);
        }
        let dist = g.bfs_distances(s, &allowed);
        let mut path = vec![s];
        let mut used = VertexSet::empty();
        used.insert(s);
        if dfs_exact(g, s, k, &dist, &mut path, &mut used) {
            let cycle = Cycle::new(g, path).expect("search emits valid cycles");
            return Some(cycle);
        }
    }
    None
}

fn dfs_exact(g: &Graph, s: usize, k: usize, dist: &[u32], path: &mut Vec<usize>, used: &mut VertexSet) -> bool {
    let d = path.len();
    let tip = path[d - 1];
    if d == k {
        return g.has_edge(tip, s);
    }
    for w in g.neighbors(tip).iter() {
        if w <= s || used.contains(w) {
            continue;
        }
        // Any completion from w needs k - d more edges to get back to s.
        if dist[w] == u32::MAX || dist[w] as usize > k - d {
            continue;
        }
        path.push(w);
        used.insert(w);
        if dfs_exact(g, s, k, dist, path, used) {
            return true;
        }
        path.pop();
        used.remove(w);
    }
    false
}

fn find_c4(g: &Graph) -> Option<Cycle> {
    let n = g.n();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.common_neighbor_count(u, v) >= 2 {
                let mut it = g.common_neighbors(u, v).iter();
                let c1 = it.next().expect("two common neighbours");
                let c2 = it.next().expect("two common neighbours");
                let cycle = Cycle::new(g, vec![u, c1, v, c2]).expect("common neighbours close a 4-cycle");
                return Some(cycle);
            }
        }
    }
    None
}

/// The exact set of cycle lengths `k <= kmax` present in `g`, by exhaustive
/// depth-first enumeration. Exponential; intended for small graphs and
/// guarded by the default operation budget.
pub fn cycle_spectrum(g: &Graph, kmax: usize) -> Result<BTreeSet<usize>, BudgetExceeded> {
    cycle_spectrum_budgeted(g, kmax, &mut Budget::default())
}

pub fn cycle_spectrum_budgeted(
    g: &Graph,
    kmax: usize,
    budget: &mut Budget,
) -> Result<BTreeSet<usize>, BudgetExceeded> {
    let n = g.n();
    let top = kmax.min(n);
    let mut found = vec![false; top + 1];
    let mut missing = if top >= 3 { top - 2 } else { 0 };
    let mut path = Vec::with_capacity(top);
    for s in 0..n {
        if missing == 0 {
            break;
        }
        path.clear();
        path.push(s);
        let mut used = VertexSet::empty();
        used.insert(s);
        spectrum_dfs(g, s, top, &mut path, &mut used, &mut found, &mut missing, budget)?;
    }
    Ok(found
        .iter()
        .enumerate()
        .filter_map(|(k, &present)| present.then_some(k))
        .collect())
}

#[allow(clippy::too_many_arguments)]
fn spectrum_dfs(
    g: &Graph,
    s: usize,
    top: usize,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
    found: &mut [bool],
    missing: &mut usize,
    budget: &mut Budget,
) -> Result<(), BudgetExceeded> {
    budget.charge(1)?;
    let d = path.len();
    let tip = path[d - 1];
    if d >= 3 && g.has_edge(tip, s) && !found[d] {
        found[d] = true;
        *missing -= 1;
        if *missing == 0 {
            return Ok(());
        }
    }
    if d == top {
        return Ok(());
    }
    for w in g.neighbors(tip).iter() {
        if w <= s || used.contains(w) {
            continue;
        }
        path.push(w);
        used.insert(w);
        spectrum_dfs(g, s, top, path, used, found, missing, budget)?;
        path.pop();
        used.remove(w);
        if *missing == 0 {
            return Ok(());
        }
    }
    Ok(())
}

/// First cycle whose length is a power of two (4, 8, 16, ... up to
/// `kmax`), trying lengths in ascending order.
pub fn has_power_of_two_cycle(g: &Graph, kmax: usize) -> Option<Cycle> {
    assert!(kmax >= 4, "power-of-two search needs kmax >= 4");
    let mut k = 4;
    while k <= kmax {
        if let Some(c) = find_cycle_of_length(g, k) {
            return Some(c);
        }
        k *= 2;
    }
    None
}

/// Enumerates every cycle with length in `[min_len, max_len]` exactly once,
/// in canonical form (minimum vertex first, lexicographically smaller
/// direction). Exponential; budget- and count-guarded.
pub fn enumerate_cycles_budgeted(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    budget: &mut Budget,
    cap: u64,
) -> Result<Vec<Cycle>, BudgetExceeded> {
    assert!(min_len >= 3, "cycles have length at least 3");
    let top = max_len.min(g.n());
    let mut out = Vec::new();
    if min_len > top {
        return Ok(out);
    }
    let mut path = Vec::with_capacity(top);
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        let mut used = VertexSet::empty();
        used.insert(s);
        cycles_dfs(g, s, min_len, top, &mut path, &mut used, &mut out, budget, cap)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cycles_dfs(
    g: &Graph,
    s: usize,
    min_len: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
    out: &mut Vec<Cycle>,
    budget: &mut Budget,
    cap: u64,
) -> Result<(), BudgetExceeded> {
    budget.charge(1)?;
    let d = path.len();
    let tip = path[d - 1];
    if d >= min_len && d >= 3 && tip > path[1] && g.has_edge(tip, s) {
        if out.len() as u64 >= cap {
            return Err(BudgetExceeded { completed: cap, budget: cap, unit: "cycles" });
        }
        let cycle = Cycle::new(g, path.clone()).expect("closed path is a cycle");
        debug_assert_eq!(cycle, cycle.canonical());
        out.push(cycle);
    }
    if d == max_len {
        return Ok(());
    }
    for w in g.neighbors(tip).iter() {
        if w <= s || used.contains(w) {
            continue;
        }
        path.push(w);
        used.insert(w);
        cycles_dfs(g, s, min_len, max_len, path, used, out, budget, cap)?;
        path.pop();
        used.remove(w);
    }
    Ok(())
}

/// Finds an induced path on exactly `k` vertices, or `None`.
///
/// Depth-first search keeping the forbidden set (all earlier path vertices
/// and their neighbourhoods); only the tip may gain a new neighbour.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Path> {
    assert!(k >= 1, "paths have at least one vertex");
    if k > g.n() {
        return None;
    }
    if k == 1 {
        return Some(Path::new(g, vec![0]).expect("single vertex"));
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        if induced_dfs(g, k, &mut path, VertexSet::empty()) {
            let path = Path::new(g, path).expect("search emits valid paths");
            debug_assert!(path.is_induced_in(g));
            return Some(path);
        }
    }
    None
}

fn induced_dfs(g: &Graph, k: usize, path: &mut Vec<usize>, forbidden: VertexSet) -> bool {
    let tip = *path.last().expect("path is nonempty");
    if path.len() == k {
        return true;
    }
    let mut next_forbidden = forbidden.union(g.neighbors(tip));
    next_forbidden.insert(tip);
    for w in g.neighbors(tip).difference(&forbidden).iter() {
        path.push(w);
        if induced_dfs(g, k, path, next_forbidden) {
            return true;
        }
        path.pop();
    }
    false
}

/// Convenience wrapper: no induced path on 10 vertices exists.
pub fn is_p10_free(g: &Graph) -> bool {
    find_induced_path(g, 10).is_none()
}

/// Whether a (validated) cycle of `g` is a hole, i.e. has no chord.
pub fn is_hole(g: &Graph, c: &Cycle) -> Result<bool, SequenceError> {
    // Re-validate: the cycle may have been built against another graph.
    let c = Cycle::new(g, c.verts().to_vec())?;
    Ok(c.chordless_in(g))
}

/// Enumerates every `m`-hole of `g` exactly once, in canonical form
/// (minimum vertex first, lexicographically smaller direction), ascending.
pub fn enumerate_holes(g: &Graph, m: usize) -> Result<Vec<Cycle>, BudgetExceeded> {
    enumerate_holes_budgeted(g, m, &mut Budget::default(), DEFAULT_HOLE_CAP)
}

pub fn enumerate_holes_budgeted(
    g: &Graph,
    m: usize,
    budget: &mut Budget,
    hole_cap: u64,
) -> Result<Vec<Cycle>, BudgetExceeded> {
    assert!(m >= 3, "holes have length at least 3");
    let mut out = Vec::new();
    if m > g.n() {
        return Ok(out);
    }
    let mut path = Vec::with_capacity(m);
    for s in 0..=(g.n() - m) {
        path.clear();
        path.push(s);
        let mut used = VertexSet::empty();
        used.insert(s);
        holes_dfs(g, s, m, &mut path, &mut used, &mut out, budget, hole_cap)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn holes_dfs(
    g: &Graph,
    s: usize,
    m: usize,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
    out: &mut Vec<Cycle>,
    budget: &mut Budget,
    hole_cap: u64,
) -> Result<(), BudgetExceeded> {
    budget.charge(1)?;
    let d = path.len();
    let tip = path[d - 1];
    if d == m - 1 {
        // Closing vertex: adjacent to both ends, no chords to the interior,
        // and larger than path[1] so each hole appears in one direction only.
        for w in g.neighbors(tip).intersection(g.neighbors(s)).iter() {
            if w <= s || used.contains(w) || w < path[1] {
                continue;
            }
            if path[1..d - 1].iter().any(|&p| g.has_edge(w, p)) {
                continue;
            }
            if out.len() as u64 >= hole_cap {
                return Err(BudgetExceeded { completed: hole_cap, budget: hole_cap, unit: "holes" });
            }
            let mut verts = path.clone();
            verts.push(w);
            let hole = Cycle::new(g, verts).expect("hole search emits valid cycles");
            debug_assert!(hole.chordless_in(g));
            debug_assert_eq!(hole, hole.canonical());
            out.push(hole);
        }
        return Ok(());
    }
    for w in g.neighbors(tip).iter() {
        if w <= s || used.contains(w) {
            continue;
        }
        // Keep the growing path chordless: w may touch only the tip.
        if path[..d - 1].iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        path.push(w);
        used.insert(w);
        holes_dfs(g, s, m, path, used, out, budget, hole_cap)?;
        path.pop();
        used.remove(w);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{heawood, petersen};

    #[test]
    fn k4_has_a_4_cycle() {
        let c = find_cycle_of_length(&Graph::complete(4), 4).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.is_valid_in(&Graph::complete(4)));
    }

    #[test]
    fn petersen_cycle_lengths() {
        let p = petersen();
        assert!(find_cycle_of_length(&p, 7).is_none());
        let c8 = find_cycle_of_length(&p, 8).unwrap();
        assert_eq!(c8.len(), 8);
        assert!(c8.is_valid_in(&p));
        assert!(find_cycle_of_length(&p, 3).is_none());
        assert!(find_cycle_of_length(&p, 4).is_none());
        assert_eq!(find_cycle_of_length(&p, 5).unwrap().len(), 5);
    }

    #[test]
    fn spectra_of_small_graphs() {
        assert_eq!(cycle_spectrum(&Graph::cycle(5), 10).unwrap(), BTreeSet::from([5]));
        assert_eq!(cycle_spectrum(&Graph::complete(4), 4).unwrap(), BTreeSet::from([3, 4]));
        // also independently cross-checked by `oracle_spectrum` below
        assert_eq!(cycle_spectrum(&petersen(), 10).unwrap(), BTreeSet::from([5, 6, 8, 9]));
    }

    #[test]
    fn spectrum_budget_trips() {
        // C6 has only one cycle, so no early exit: the walk to depth 6
        // charges more than 3 operations.
        let g = Graph::cycle(6);
        let mut tiny = Budget::ops(3);
        let err = cycle_spectrum_budgeted(&g, 6, &mut tiny).unwrap_err();
        assert_eq!(err.budget, 3);
    }

    #[test]
    fn power_of_two_cycles() {
        assert_eq!(has_power_of_two_cycle(&Graph::complete(4), 16).unwrap().len(), 4);
        assert!(has_power_of_two_cycle(&Graph::cycle(5), 16).is_none());
        assert_eq!(has_power_of_two_cycle(&heawood(), 16).unwrap().len(), 8);
    }

    #[test]
    fn induced_paths() {
        let p10 = Graph::path(10);
        let found = find_induced_path(&p10, 10).unwrap();
        assert_eq!(found.order(), 10);
        assert!(found.is_induced_in(&p10));

        assert!(find_induced_path(&Graph::cycle(9), 10).is_none());

        let c12 = Graph::cycle(12);
        let found = find_induced_path(&c12, 10).unwrap();
        assert_eq!(found.order(), 10);
        assert!(found.is_induced_in(&c12));

        // Petersen's longest induced path has 5 vertices.
        assert!(find_induced_path(&petersen(), 6).is_none());
        assert_eq!(find_induced_path(&petersen(), 5).unwrap().order(), 5);
        assert!(is_p10_free(&petersen()));
    }

    #[test]
    fn hole_predicate() {
        let c5 = Graph::cycle(5);
        let cyc = Cycle::new(&c5, vec![0, 1, 2, 3, 4]).unwrap();
        assert!(is_hole(&c5, &cyc).unwrap());

        let k4 = Graph::complete(4);
        let cyc = Cycle::new(&k4, vec![0, 1, 2, 3]).unwrap();
        assert!(!is_hole(&k4, &cyc).unwrap());

        let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        edges.push((0, 4));
        let c9c = Graph::from_edge_list(9, &edges).unwrap();
        let cyc = Cycle::new(&c9c, (0..9).collect()).unwrap();
        assert!(!is_hole(&c9c, &cyc).unwrap());

        // a cycle of one graph is invalid in another
        assert!(is_hole(&Graph::empty(5).unwrap(), &cyc).is_err());
    }

    #[test]
    fn hole_enumeration() {
        assert_eq!(enumerate_holes(&petersen(), 5).unwrap().len(), 12);
        assert!(enumerate_holes(&Graph::complete(4), 4).unwrap().is_empty());
        let sevens = enumerate_holes(&Graph::cycle(7), 7).unwrap();
        assert_eq!(sevens.len(), 1);
        assert_eq!(sevens[0].verts(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn holes_are_canonical_and_chordless() {
        let p = petersen();
        for hole in enumerate_holes(&p, 5).unwrap() {
            assert!(is_hole(&p, &hole).unwrap());
            assert_eq!(hole.canonical(), hole);
            assert!(hole.verts()[1] < hole.verts()[4]);
        }
    }

    #[test]
    fn canonical_form_examples() {
        let g = Graph::cycle(6);
        let c = Cycle::new(&g, vec![3, 2, 1, 0, 5, 4]).unwrap();
        assert_eq!(c.canonical().verts(), &[0, 1, 2, 3, 4, 5]);
    }

    /// Independent enumeration oracle: adjacency lists, descending order,
    /// no shared code with `cycle_spectrum`.
    fn oracle_spectrum(g: &Graph, kmax: usize) -> BTreeSet<usize> {
        let n = g.n();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in g.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable_by(|a, b| b.cmp(a));
        }
        fn go(
            adj: &[Vec<usize>],
            root: usize,
            kmax: usize,
            stack: &mut Vec<usize>,
            on: &mut Vec<bool>,
            out: &mut BTreeSet<usize>,
        ) {
            let tip = *stack.last().unwrap();
            if stack.len() >= 3 && adj[tip].contains(&root) {
                out.insert(stack.len());
            }
            if stack.len() == kmax {
                return;
            }
            for &w in &adj[tip] {
                if w <= root || on[w] {
                    continue;
                }
                on[w] = true;
                stack.push(w);
                go(adj, root, kmax, stack, on, out);
                stack.pop();
                on[w] = false;
            }
        }
        let mut out = BTreeSet::new();
        let kmax = kmax.min(n);
        for root in (0..n).rev() {
            let mut on = vec![false; n];
            on[root] = true;
            go(&adj, root, kmax, &mut vec![root], &mut on, &mut out);
        }
        out
    }

    #[test]
    fn spectrum_matches_independent_oracle() {
        for g in [petersen(), heawood(), Graph::complete(6), Graph::cycle(9), Graph::path(7)] {
            let n = g.n();
            assert_eq!(cycle_spectrum(&g, n).unwrap(), oracle_spectrum(&g, n));
        }
    }

    #[test]
    fn heawood_spectrum() {
        assert_eq!(cycle_spectrum(&heawood(), 16).unwrap(), BTreeSet::from([6, 8, 10, 12, 14]));
    }

    #[test]
    fn sequence_validation_errors() {
        let g = Graph::cycle(5);
        assert_eq!(Cycle::new(&g, vec![0, 1]).unwrap_err(), SequenceError::TooShort(2));
        assert_eq!(Cycle::new(&g, vec![0, 1, 0]).unwrap_err(), SequenceError::Repeated(0));
        assert_eq!(
            Cycle::new(&g, vec![0, 1, 7]).unwrap_err(),
            SequenceError::OutOfRange { vertex: 7, n: 5 }
        );
        assert_eq!(Cycle::new(&g, vec![0, 1, 3]).unwrap_err(), SequenceError::MissingEdge(1, 3));
        assert_eq!(Path::new(&g, vec![0, 2]).unwrap_err(), SequenceError::MissingEdge(0, 2));
    }
}
