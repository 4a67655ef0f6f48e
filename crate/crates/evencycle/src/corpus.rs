//! Reference graphs and corpus access: named fixtures, the exhaustive
//! labeled-graph enumerator, and graph6 file readers.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use crate::graph::Graph;
use crate::graph6;

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i - (i+5)`, inner
/// pentagram `(i+5) - ((i+2) mod 5 + 5)`. 3-regular, girth 5.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edge_list(10, &edges).expect("well-formed fixture")
}

/// The Heawood graph (14 vertices, 3-regular, girth 6) as a cycle with
/// skip-5 chords from the even positions.
pub fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    Graph::from_edge_list(14, &edges).expect("well-formed fixture")
}

/// The theta graph with branch vertices 0 and 1 joined by three internally
/// disjoint paths of lengths 2 (via 2), 3 (via 3, 4) and 3 (via 5, 6).
pub fn theta_233() -> Graph {
    Graph::from_edge_list(7, &[(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 1)])
        .expect("well-formed fixture")
}

/// The complete bipartite graph `K_{3,3}` on parts `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(6, &edges).expect("well-formed fixture")
}

/// Builds the labeled graph on `n` vertices selected by `mask`, one bit
/// per vertex pair in column-major upper-triangle order (the graph6 bit
/// order): `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn labeled_graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("enumerator order under cap");
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask & (1u64 << bit) != 0 {
                g.add_edge_unchecked(u, v);
            }
            bit += 1;
        }
    }
    g
}

/// Iterator over all `2^(n choose 2)` labeled graphs on `n` vertices, in
/// mask order, with no isomorphism rejection. Desk-scale only.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "exhaustive labeled enumeration is intended for n <= 7");
    let bits = n * n.saturating_sub(1) / 2;
    (0..(1u64 << bits)).map(move |mask| labeled_graph_from_mask(n, mask))
}

pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Reads a graph6 file: one record per line, blank lines skipped. Returns
/// the raw records; parse them individually so per-record errors can be
/// reported with their input index.
pub fn read_graph6_lines(path: &Path) -> io::Result<Vec<String>> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            out.push(trimmed.to_string());
        }
    }
    Ok(out)
}

/// Parses every record in a graph6 file, failing on the first bad one.
/// Convenience for tests and fixtures; the scan harness does per-record
/// error handling instead.
pub fn read_graph6_file(path: &Path) -> io::Result<Vec<Graph>> {
    read_graph6_lines(path)?
        .iter()
        .map(|rec| {
            graph6::from_graph6(rec)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, format!("{rec:?}: {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::{from_graph6, to_graph6};

    #[test]
    fn fixtures_are_what_they_claim() {
        let p = petersen();
        assert_eq!((p.n(), p.edge_count(), p.min_degree()), (10, 15, 3));
        let h = heawood();
        assert_eq!((h.n(), h.edge_count(), h.min_degree()), (14, 21, 3));
        for v in 0..14 {
            assert_eq!(h.degree(v), 3);
        }
        let t = theta_233();
        assert_eq!((t.n(), t.edge_count()), (7, 8));
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.degree(1), 3);
    }

    // Records produced by an independent encoder for the same labelings.
    #[test]
    fn fixture_graph6_records() {
        assert_eq!(to_graph6(&petersen()).unwrap(), "IheA@GUAo");
        assert_eq!(to_graph6(&heawood()).unwrap(), "MhEGHC@AI?_PC@_G_");
        assert_eq!(to_graph6(&theta_233()).unwrap(), "F[UAG");
        assert_eq!(from_graph6("IheA@GUAo").unwrap(), petersen());
    }

    #[test]
    fn mask_enumeration_counts() {
        assert_eq!(labeled_graphs(3).count(), 8);
        assert_eq!(labeled_graphs(4).count(), 64);
        assert_eq!(labeled_graph_count(7), 1 << 21);
        // last mask of n = 3 is the triangle
        let k3 = labeled_graph_from_mask(3, 0b111);
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn mask_order_matches_graph6_bit_order() {
        // mask bit i set <=> graph6 bit i set, for a few samples
        for mask in [0u64, 1, 2, 0b1010110101, 0b111111111111111] {
            let g = labeled_graph_from_mask(6, mask);
            let rec = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&rec).unwrap(), g);
        }
    }
}
