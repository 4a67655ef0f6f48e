//! The total certificate function: every simple graph yields a vertex of
//! degree below three, a 4-cycle, an 8-cycle, or an induced 10-vertex
//! path. The four branches are tried cheapest-first in a fixed order, so
//! the result is a deterministic function of the graph and can be used as
//! a regression fixture. A graph yielding none of the four would disprove
//! the exhaustiveness of the union — the most valuable possible output —
//! and is reported as a distinguished error, never swallowed.
//!
//! Also here: the power-of-two cycle hunt used for counterexample sweeps
//! over corpora.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::cycles::{
    cycle_spectrum_budgeted, find_cycle_of_length, find_induced_path, has_power_of_two_cycle, Cycle,
    Path,
};
use crate::graph::Graph;
use crate::graph6;

/// A machine-checkable classification witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Cycle4(Cycle),
    Cycle8(Cycle),
    InducedP10(Path),
    LowDegreeVertex { vertex: usize, degree: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    LowDegreeVertex,
    Cycle4,
    Cycle8,
    InducedP10,
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Certificate::Cycle4(_) => CertificateKind::Cycle4,
            Certificate::Cycle8(_) => CertificateKind::Cycle8,
            Certificate::InducedP10(_) => CertificateKind::InducedP10,
            Certificate::LowDegreeVertex { .. } => CertificateKind::LowDegreeVertex,
        }
    }

    /// The witness as a vertex sequence (single vertex for the low-degree
    /// case).
    pub fn witness_vertices(&self) -> Vec<usize> {
        match self {
            Certificate::Cycle4(c) | Certificate::Cycle8(c) => c.verts().to_vec(),
            Certificate::InducedP10(p) => p.verts().to_vec(),
            Certificate::LowDegreeVertex { vertex, .. } => vec![*vertex],
        }
    }
}

/// No certificate matched: disproof-grade, to be serialized as a
/// counterexample bundle by the caller.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("no certificate found: graph has minimum degree >= 3, no 4-cycle, no 8-cycle, and no induced 10-vertex path")]
pub struct TheoremViolation;

/// Classifies a graph with exactly one certificate, trying the branches in
/// the fixed priority order: low-degree vertex, 4-cycle, 8-cycle, induced
/// 10-vertex path. Graphs under 8 vertices cannot hold an 8-cycle and
/// graphs under 10 cannot hold the induced path, so those branches are
/// skipped outright at small orders.
///
/// Panics on the vertexless graph: no certificate kind can describe it
/// (there is no vertex to blame and nothing to contain a cycle). Callers
/// reject `n = 0` records up front.
pub fn classify(g: &Graph) -> Result<Certificate, TheoremViolation> {
    assert!(g.n() >= 1, "the vertexless graph has no certificate");
    let cert = classify_inner(g)?;
    debug_assert!(verify_certificate(g, &cert));
    Ok(cert)
}

fn classify_inner(g: &Graph) -> Result<Certificate, TheoremViolation> {
    if let Some(v) = g.low_degree_vertex() {
        return Ok(Certificate::LowDegreeVertex { vertex: v, degree: g.degree(v) });
    }
    if let Some(c4) = find_cycle_of_length(g, 4) {
        return Ok(Certificate::Cycle4(c4));
    }
    if g.n() >= 8 {
        if let Some(c8) = find_cycle_of_length(g, 8) {
            return Ok(Certificate::Cycle8(c8));
        }
    }
    if g.n() >= 10 {
        if let Some(p) = find_induced_path(g, 10) {
            return Ok(Certificate::InducedP10(p));
        }
    }
    Err(TheoremViolation)
}

/// Independent witness check against raw adjacency only. Deliberately
/// shares no code with the searches: plain index loops over `has_edge`
/// and `degree`.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    match cert {
        Certificate::Cycle4(c) => verify_cycle_raw(g, c.verts(), 4),
        Certificate::Cycle8(c) => verify_cycle_raw(g, c.verts(), 8),
        Certificate::InducedP10(p) => verify_induced_path_raw(g, p.verts(), 10),
        Certificate::LowDegreeVertex { vertex, degree } => {
            *vertex < g.n() && g.degree(*vertex) == *degree && *degree < 3
        }
    }
}

fn verify_cycle_raw(g: &Graph, verts: &[usize], want_len: usize) -> bool {
    if verts.len() != want_len {
        return false;
    }
    for (i, &v) in verts.iter().enumerate() {
        if v >= g.n() {
            return false;
        }
        if verts[..i].contains(&v) {
            return false;
        }
        if !g.has_edge(v, verts[(i + 1) % verts.len()]) {
            return false;
        }
    }
    true
}

fn verify_induced_path_raw(g: &Graph, verts: &[usize], want_order: usize) -> bool {
    if verts.len() != want_order {
        return false;
    }
    for (i, &v) in verts.iter().enumerate() {
        if v >= g.n() || verts[..i].contains(&v) {
            return false;
        }
        for (j, &w) in verts.iter().enumerate().skip(i + 1) {
            if g.has_edge(v, w) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FindEvenCycleError {
    /// The graph fails a precondition; carries the witness (a low-degree
    /// vertex or an induced 10-vertex path).
    #[error("precondition failed")]
    PreconditionFailed(Certificate),
    #[error(transparent)]
    TheoremViolation(#[from] TheoremViolation),
}

/// Finds a 4- or 8-cycle in a graph that is checked to have minimum degree
/// at least 3 and no induced 10-vertex path (4-cycles preferred). Failure
/// past the precondition checks is disproof-grade.
pub fn find_c4_or_c8(g: &Graph) -> Result<Cycle, FindEvenCycleError> {
    if let Some(v) = g.low_degree_vertex() {
        return Err(FindEvenCycleError::PreconditionFailed(Certificate::LowDegreeVertex {
            vertex: v,
            degree: g.degree(v),
        }));
    }
    if let Some(p) = find_induced_path(g, 10) {
        return Err(FindEvenCycleError::PreconditionFailed(Certificate::InducedP10(p)));
    }
    if let Some(c4) = find_cycle_of_length(g, 4) {
        return Ok(c4);
    }
    if g.n() >= 8 {
        if let Some(c8) = find_cycle_of_length(g, 8) {
            return Ok(c8);
        }
    }
    Err(TheoremViolation.into())
}

/// Graph-class predicate used to select corpus records.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassFilter {
    pub min_degree: Option<usize>,
    pub connected: bool,
    pub cubic: bool,
    pub p10_free: bool,
}

impl ClassFilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        if let Some(d) = self.min_degree {
            if g.min_degree() < d {
                return false;
            }
        }
        if self.connected && !g.is_connected() {
            return false;
        }
        if self.cubic && !(0..g.n()).all(|v| g.degree(v) == 3) {
            return false;
        }
        if self.p10_free && find_induced_path(g, 10).is_some() {
            return false;
        }
        true
    }

    /// Parses the comma-separated flag syntax:
    /// `min-degree=K,connected,cubic,p10-free`.
    pub fn parse(spec: &str) -> Result<ClassFilter, String> {
        let mut f = ClassFilter::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if let Some(k) = part.strip_prefix("min-degree=") {
                let k = k.parse::<usize>().map_err(|_| format!("bad min-degree value {k:?}"))?;
                f.min_degree = Some(k);
            } else {
                match part {
                    "connected" => f.connected = true,
                    "cubic" => f.cubic = true,
                    "p10-free" => f.p10_free = true,
                    other => return Err(format!("unknown filter term {other:?}")),
                }
            }
        }
        Ok(f)
    }
}

impl std::fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if let Some(d) = self.min_degree {
            parts.push(format!("min-degree={d}"));
        }
        if self.connected {
            parts.push("connected".into());
        }
        if self.cubic {
            parts.push("cubic".into());
        }
        if self.p10_free {
            parts.push("p10-free".into());
        }
        if parts.is_empty() {
            write!(f, "all")
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

#[derive(Debug, Clone)]
pub struct HuntConfig {
    pub kmax: usize,
    pub filter: ClassFilter,
    /// Largest order on which the exhaustive spectrum double-check runs.
    pub oracle_cap: usize,
    pub op_budget: u64,
    pub workers: usize,
}

impl Default for HuntConfig {
    fn default() -> Self {
        HuntConfig {
            kmax: 16,
            filter: ClassFilter::default(),
            oracle_cap: 14,
            op_budget: crate::budget::DEFAULT_OP_BUDGET,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HuntCounterexample {
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HuntRecordError {
    pub index: usize,
    pub message: String,
}

/// Outcome of a hunt sweep. `counterexamples` is empty exactly when the
/// power-of-two bound holds on the scanned range.
#[derive(Debug, Clone, Serialize)]
pub struct HuntResult {
    pub filter: String,
    pub kmax: usize,
    pub examined: u64,
    pub counterexamples: Vec<HuntCounterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<HuntRecordError>,
    pub wall_time_ms: u128,
    #[serde(skip)]
    pub vertex_range: Option<(usize, usize)>,
}

enum HuntOutcome {
    Filtered,
    Clean { n: usize },
    Counterexample { n: usize, record: HuntCounterexample },
    Error(String),
}

/// Sweeps a corpus for graphs with no cycle of power-of-two length up to
/// `kmax`. A candidate found by the search is double-checked against the
/// exhaustive spectrum oracle when the graph is small enough; per-record
/// parse and budget errors are recorded, not fatal.
pub fn hunt_power_of_two(records: &[String], config: &HuntConfig) -> HuntResult {
    assert!(config.kmax >= 4, "hunt needs kmax >= 4");
    let start = Instant::now();
    let outcomes: Vec<HuntOutcome> = if config.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("worker pool");
        pool.install(|| records.par_iter().map(|rec| hunt_record(rec, config)).collect())
    } else {
        records.iter().map(|rec| hunt_record(rec, config)).collect()
    };

    let mut result = HuntResult {
        filter: config.filter.to_string(),
        kmax: config.kmax,
        examined: 0,
        counterexamples: Vec::new(),
        errors: Vec::new(),
        wall_time_ms: 0,
        vertex_range: None,
    };
    for (index, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            HuntOutcome::Filtered => {}
            HuntOutcome::Clean { n } => {
                result.examined += 1;
                widen(&mut result.vertex_range, n);
            }
            HuntOutcome::Counterexample { n, record } => {
                result.examined += 1;
                widen(&mut result.vertex_range, n);
                result.counterexamples.push(record);
            }
            HuntOutcome::Error(message) => result.errors.push(HuntRecordError { index, message }),
        }
    }
    result.wall_time_ms = start.elapsed().as_millis();
    result
}

fn widen(range: &mut Option<(usize, usize)>, n: usize) {
    *range = Some(match *range {
        None => (n, n),
        Some((lo, hi)) => (lo.min(n), hi.max(n)),
    });
}

fn hunt_record(record: &str, config: &HuntConfig) -> HuntOutcome {
    let g = match graph6::from_graph6(record) {
        Ok(g) => g,
        Err(e) => return HuntOutcome::Error(e.to_string()),
    };
    if !config.filter.accepts(&g) {
        return HuntOutcome::Filtered;
    }
    if let Some(c) = has_power_of_two_cycle(&g, config.kmax) {
        debug_assert!(c.len().is_power_of_two());
        return HuntOutcome::Clean { n: g.n() };
    }
    // Candidate: double-check against the exhaustive oracle when feasible.
    if g.n() <= config.oracle_cap {
        let mut budget = Budget::ops(config.op_budget);
        match cycle_spectrum_budgeted(&g, config.kmax.min(g.n()), &mut budget) {
            Ok(spectrum) => {
                if let Some(k) = spectrum.iter().find(|k| k.is_power_of_two() && **k >= 4) {
                    // The direct search missed a cycle the oracle sees: a
                    // search bug, surfaced loudly rather than recorded.
                    return HuntOutcome::Error(format!(
                        "internal disagreement: oracle found a {k}-cycle the search missed"
                    ));
                }
            }
            Err(e) => return HuntOutcome::Error(BudgetExceeded::to_string(&e)),
        }
    }
    let reason = format!("no cycle of length 4, 8, ... <= {}", config.kmax);
    HuntOutcome::Counterexample {
        n: g.n(),
        record: HuntCounterexample { graph6: record.to_string(), reason },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::petersen;
    use crate::graph6::to_graph6;

    #[test]
    fn classify_low_degree_first() {
        let cert = classify(&Graph::cycle(5)).unwrap();
        assert_eq!(cert, Certificate::LowDegreeVertex { vertex: 0, degree: 2 });
        assert!(verify_certificate(&Graph::cycle(5), &cert));
    }

    #[test]
    fn classify_k4_and_petersen() {
        let k4 = Graph::complete(4);
        let cert = classify(&k4).unwrap();
        assert_eq!(cert.kind(), CertificateKind::Cycle4);
        assert!(verify_certificate(&k4, &cert));

        let p = petersen();
        let cert = classify(&p).unwrap();
        assert_eq!(cert.kind(), CertificateKind::Cycle8);
        assert!(verify_certificate(&p, &cert));
    }

    #[test]
    #[should_panic(expected = "vertexless")]
    fn classify_rejects_the_vertexless_graph() {
        let _ = classify(&Graph::empty(0).unwrap());
    }

    #[test]
    fn classify_one_vertex_graph() {
        let g = Graph::empty(1).unwrap();
        let cert = classify(&g).unwrap();
        assert_eq!(cert, Certificate::LowDegreeVertex { vertex: 0, degree: 0 });
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn classify_verification_disagreement_detected() {
        let p = petersen();
        let bogus = Certificate::LowDegreeVertex { vertex: 0, degree: 2 };
        assert!(!verify_certificate(&p, &bogus));
        let c5 = Graph::cycle(5);
        let k4 = Graph::complete(4);
        let c4 = match classify(&k4).unwrap() {
            Certificate::Cycle4(c) => Certificate::Cycle4(c),
            other => panic!("K4 classifies as a 4-cycle, got {other:?}"),
        };
        assert!(!verify_certificate(&c5, &c4));
    }

    #[test]
    fn find_even_cycle_checks_preconditions() {
        assert_eq!(find_c4_or_c8(&Graph::complete(4)).unwrap().len(), 4);
        assert_eq!(find_c4_or_c8(&petersen()).unwrap().len(), 8);
        match find_c4_or_c8(&Graph::path(10)) {
            Err(FindEvenCycleError::PreconditionFailed(Certificate::LowDegreeVertex {
                vertex: 0,
                degree: 1,
            })) => {}
            other => panic!("expected the low-degree precondition, got {other:?}"),
        }
    }

    #[test]
    fn filter_parsing_and_display() {
        let f = ClassFilter::parse("min-degree=3,connected,cubic,p10-free").unwrap();
        assert_eq!(
            f,
            ClassFilter { min_degree: Some(3), connected: true, cubic: true, p10_free: true }
        );
        assert_eq!(f.to_string(), "min-degree=3,connected,cubic,p10-free");
        assert_eq!(ClassFilter::default().to_string(), "all");
        assert!(ClassFilter::parse("bogus").is_err());
    }

    #[test]
    fn filter_semantics() {
        let f = ClassFilter { min_degree: Some(3), ..Default::default() };
        assert!(!f.accepts(&Graph::cycle(5)));
        assert!(f.accepts(&petersen()));
        let f = ClassFilter { cubic: true, ..Default::default() };
        assert!(f.accepts(&petersen()));
        assert!(!f.accepts(&Graph::complete(5)));
        let f = ClassFilter { connected: true, ..Default::default() };
        assert!(!f.accepts(&Graph::from_edge_list(6, &[(0, 1), (2, 3)]).unwrap()));
    }

    #[test]
    fn hunt_over_small_corpus() {
        let records = vec![
            to_graph6(&Graph::cycle(5)).unwrap(),     // filtered out (degree 2)
            to_graph6(&Graph::complete(4)).unwrap(),  // has a 4-cycle
            to_graph6(&petersen()).unwrap(),          // has an 8-cycle
            "!!!".to_string(),                        // malformed
        ];
        let config = HuntConfig {
            filter: ClassFilter { min_degree: Some(3), ..Default::default() },
            ..Default::default()
        };
        let result = hunt_power_of_two(&records, &config);
        assert_eq!(result.examined, 2);
        assert!(result.counterexamples.is_empty());
        assert_eq!(result.errors.len(), 1);
        assert_eq!(result.errors[0].index, 3);
        assert_eq!(result.vertex_range, Some((4, 10)));
    }

    #[test]
    fn hunt_reports_honest_counterexamples() {
        // C5 passes an unfiltered hunt and has no power-of-two cycle.
        let records = vec![to_graph6(&Graph::cycle(5)).unwrap()];
        let result = hunt_power_of_two(&records, &HuntConfig::default());
        assert_eq!(result.examined, 1);
        assert_eq!(result.counterexamples.len(), 1);
        assert!(result.counterexamples[0].reason.contains("no cycle"));
    }
}
