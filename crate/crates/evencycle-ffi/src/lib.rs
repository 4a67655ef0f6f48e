//! C ABI for the evencycle certificate library.
//!
//! Graphs and certificates are opaque handles created and destroyed here;
//! every function returns an [`EcStatus`] (or a plain value for infallible
//! queries) and never unwinds across the boundary. Witness vertices are
//! copied into caller-provided buffers.
//!
//! The generated header lives at `include/evencycle.h`.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use evencycle::classify::{classify, verify_certificate, Certificate};
use evencycle::graph::Graph;
use evencycle::graph6::{from_graph6_any, to_graph6, Graph6Error};
use evencycle::cycles::find_cycle_of_length;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcStatus {
    Ok = 0,
    NullPointer = 1,
    MalformedRecord = 2,
    UnsupportedSize = 3,
    InvalidArgument = 4,
    /// No certificate matched: disproof-grade; report the graph.
    NoCertificate = 5,
    BufferTooSmall = 6,
    NotFound = 7,
}

/// Certificate kinds, in classification priority order.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcCertificateKind {
    LowDegreeVertex = 0,
    Cycle4 = 1,
    Cycle8 = 2,
    InducedP10 = 3,
}

/// Opaque graph handle.
pub struct EcGraph {
    inner: Graph,
}

/// Opaque certificate handle.
pub struct EcCertificate {
    inner: Certificate,
}

/// Parses one graph6 record (short or long form) into a new graph handle.
/// The record must be NUL-terminated. On success `*out` owns the graph;
/// release it with `ec_graph_free`.
///
/// # Safety
/// `record` must point to a valid NUL-terminated string and `out` to a
/// writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_from_graph6(record: *const c_char, out: *mut *mut EcGraph) -> EcStatus {
    if record.is_null() || out.is_null() {
        return EcStatus::NullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    let text = match unsafe { CStr::from_ptr(record) }.to_str() {
        Ok(t) => t,
        Err(_) => return EcStatus::MalformedRecord,
    };
    match from_graph6_any(text) {
        Ok(g) => {
            unsafe { *out = Box::into_raw(Box::new(EcGraph { inner: g })) };
            EcStatus::Ok
        }
        Err(Graph6Error::MalformedRecord(_)) => EcStatus::MalformedRecord,
        Err(Graph6Error::UnsupportedSize { .. }) => EcStatus::UnsupportedSize,
    }
}

/// Builds a graph from an edge list: `edges` holds `2 * edge_count`
/// endpoints, pairwise. Loops and out-of-range endpoints are rejected.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable entries (may be NULL
/// when `edge_count` is 0) and `out` to a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_from_edge_list(
    vertex_count: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut EcGraph,
) -> EcStatus {
    if out.is_null() || (edges.is_null() && edge_count > 0) {
        return EcStatus::NullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    let flat = if edge_count == 0 {
        &[][..]
    } else {
        unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) }
    };
    let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    match Graph::from_edge_list(vertex_count, &pairs) {
        Ok(g) => {
            unsafe { *out = Box::into_raw(Box::new(EcGraph { inner: g })) };
            EcStatus::Ok
        }
        Err(evencycle::GraphError::UnsupportedSize { .. }) => EcStatus::UnsupportedSize,
        Err(_) => EcStatus::InvalidArgument,
    }
}

/// Releases a graph handle. NULL is a no-op.
///
/// # Safety
/// `g` must be NULL or a pointer previously returned by a graph
/// constructor, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_free(g: *mut EcGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_vertex_count(g: *const EcGraph) -> usize {
    unsafe { &*g }.inner.n()
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_edge_count(g: *const EcGraph) -> usize {
    unsafe { &*g }.inner.edge_count()
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_min_degree(g: *const EcGraph) -> usize {
    unsafe { &*g }.inner.min_degree()
}

/// # Safety
/// `g` must be a live graph handle; out-of-range vertices return false.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_has_edge(g: *const EcGraph, u: usize, v: usize) -> bool {
    let g = &unsafe { &*g }.inner;
    u < g.n() && v < g.n() && g.has_edge(u, v)
}

/// Writes the short-form graph6 record of the graph as a NUL-terminated
/// string into `buf`. Fails with `BufferTooSmall` unless `cap` covers the
/// record plus the terminator; `UnsupportedSize` above 62 vertices.
///
/// # Safety
/// `g` must be a live graph handle and `buf` writable for `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_to_graph6(g: *const EcGraph, buf: *mut c_char, cap: usize) -> EcStatus {
    if g.is_null() || buf.is_null() {
        return EcStatus::NullPointer;
    }
    let record = match to_graph6(&unsafe { &*g }.inner) {
        Ok(r) => r,
        Err(_) => return EcStatus::UnsupportedSize,
    };
    let c = CString::new(record).expect("graph6 has no interior NUL");
    let bytes = c.as_bytes_with_nul();
    if bytes.len() > cap {
        return EcStatus::BufferTooSmall;
    }
    unsafe { ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, bytes.len()) };
    EcStatus::Ok
}

/// Classifies the graph. On success `*out` owns the certificate; release
/// it with `ec_certificate_free`. `NoCertificate` would disprove the
/// exhaustiveness of the certificate union; `InvalidArgument` marks the
/// vertexless graph, which no certificate can describe.
///
/// # Safety
/// `g` must be a live graph handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ec_classify(g: *const EcGraph, out: *mut *mut EcCertificate) -> EcStatus {
    if g.is_null() || out.is_null() {
        return EcStatus::NullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    let graph = &unsafe { &*g }.inner;
    if graph.n() == 0 {
        return EcStatus::InvalidArgument;
    }
    match classify(graph) {
        Ok(cert) => {
            unsafe { *out = Box::into_raw(Box::new(EcCertificate { inner: cert })) };
            EcStatus::Ok
        }
        Err(_) => EcStatus::NoCertificate,
    }
}

/// Releases a certificate handle. NULL is a no-op.
///
/// # Safety
/// `cert` must be NULL or a pointer returned by `ec_classify`, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn ec_certificate_free(cert: *mut EcCertificate) {
    if !cert.is_null() {
        drop(unsafe { Box::from_raw(cert) });
    }
}

/// # Safety
/// `cert` must be a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn ec_certificate_kind(cert: *const EcCertificate) -> EcCertificateKind {
    match unsafe { &*cert }.inner {
        Certificate::LowDegreeVertex { .. } => EcCertificateKind::LowDegreeVertex,
        Certificate::Cycle4(_) => EcCertificateKind::Cycle4,
        Certificate::Cycle8(_) => EcCertificateKind::Cycle8,
        Certificate::InducedP10(_) => EcCertificateKind::InducedP10,
    }
}

/// Number of vertices in the witness (1 for a low-degree certificate).
///
/// # Safety
/// `cert` must be a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn ec_certificate_witness_len(cert: *const EcCertificate) -> usize {
    unsafe { &*cert }.inner.witness_vertices().len()
}

/// Copies the witness vertex sequence into `buf`.
///
/// # Safety
/// `cert` must be a live certificate handle and `buf` writable for `cap`
/// entries.
#[no_mangle]
pub unsafe extern "C" fn ec_certificate_witness(
    cert: *const EcCertificate,
    buf: *mut usize,
    cap: usize,
) -> EcStatus {
    if cert.is_null() || buf.is_null() {
        return EcStatus::NullPointer;
    }
    let verts = unsafe { &*cert }.inner.witness_vertices();
    if verts.len() > cap {
        return EcStatus::BufferTooSmall;
    }
    unsafe { ptr::copy_nonoverlapping(verts.as_ptr(), buf, verts.len()) };
    EcStatus::Ok
}

/// Re-checks a certificate against a graph from raw adjacency, sharing no
/// code with the searches that produced it.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn ec_verify_certificate(g: *const EcGraph, cert: *const EcCertificate) -> bool {
    if g.is_null() || cert.is_null() {
        return false;
    }
    verify_certificate(&unsafe { &*g }.inner, &unsafe { &*cert }.inner)
}

/// Looks for a cycle of length exactly `k` (`k >= 3`). On success the
/// cycle's vertices are copied into `buf` and `*found_len` is set to `k`;
/// `NotFound` reports a clean miss.
///
/// # Safety
/// `g` must be a live graph handle, `buf` writable for `cap` entries, and
/// `found_len` a writable slot.
#[no_mangle]
pub unsafe extern "C" fn ec_find_cycle_of_length(
    g: *const EcGraph,
    k: usize,
    buf: *mut usize,
    cap: usize,
    found_len: *mut usize,
) -> EcStatus {
    if g.is_null() || buf.is_null() || found_len.is_null() {
        return EcStatus::NullPointer;
    }
    if k < 3 {
        return EcStatus::InvalidArgument;
    }
    unsafe { *found_len = 0 };
    match find_cycle_of_length(&unsafe { &*g }.inner, k) {
        Some(cycle) => {
            if cycle.len() > cap {
                return EcStatus::BufferTooSmall;
            }
            unsafe {
                ptr::copy_nonoverlapping(cycle.verts().as_ptr(), buf, cycle.len());
                *found_len = cycle.len();
            }
            EcStatus::Ok
        }
        None => EcStatus::NotFound,
    }
}
