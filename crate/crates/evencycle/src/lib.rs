//! evencycle: short-even-cycle certificates and structural checks for
//! graph corpora.
//!
//! The library classifies every simple graph with exactly one of four
//! machine-checkable certificates — a 4-cycle, an 8-cycle, an induced
//! 10-vertex path, or a vertex of degree below three — and ships the
//! structural machinery (hole extraction, hole contexts, good and
//! near-good path searches, theta embeddings) plus a corpus harness that
//! verifies the underlying structural facts exhaustively at desk scale.
//!
//! Graphs are immutable bitset-adjacency structures (vertex cap
//! [`graph::MAX_VERTICES`]), read and written bit-exactly in the graph6
//! format. All searches are deterministic: ascending iteration order,
//! first witness wins, identical output regardless of thread count.

pub mod budget;
pub mod classify;
pub mod corpus;
pub mod cycles;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod structure;

pub use budget::{Budget, BudgetExceeded, DEFAULT_HOLE_CAP, DEFAULT_OP_BUDGET};
pub use classify::{classify, find_c4_or_c8, verify_certificate, Certificate, CertificateKind};
pub use cycles::{
    cycle_spectrum, enumerate_holes, find_cycle_of_length, find_induced_path, has_power_of_two_cycle,
    is_hole, is_p10_free, Cycle, Path,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{from_graph6, from_graph6_any, to_graph6, to_graph6_any, Graph6Error};
pub use structure::{
    compute_hole_context, extract_hole, find_good_hole, find_good_path, find_good_path_len3,
    find_near_good_path, find_theta_233, t_m, HoleContext,
};
