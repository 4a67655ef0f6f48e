#ifndef EVENCYCLE_H
#define EVENCYCLE_H

/* Generated from the Rust sources by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Certificate kinds, in classification priority order.
typedef enum EcCertificateKind {
  EC_CERTIFICATE_KIND_LOW_DEGREE_VERTEX = 0,
  EC_CERTIFICATE_KIND_CYCLE4 = 1,
  EC_CERTIFICATE_KIND_CYCLE8 = 2,
  EC_CERTIFICATE_KIND_INDUCED_P10 = 3,
} EcCertificateKind;

// Status codes returned by every fallible entry point.
typedef enum EcStatus {
  EC_STATUS_OK = 0,
  EC_STATUS_NULL_POINTER = 1,
  EC_STATUS_MALFORMED_RECORD = 2,
  EC_STATUS_UNSUPPORTED_SIZE = 3,
  EC_STATUS_INVALID_ARGUMENT = 4,
  // No certificate matched: disproof-grade; report the graph.
  EC_STATUS_NO_CERTIFICATE = 5,
  EC_STATUS_BUFFER_TOO_SMALL = 6,
  EC_STATUS_NOT_FOUND = 7,
} EcStatus;

// Opaque certificate handle.
typedef struct EcCertificate EcCertificate;

// Opaque graph handle.
typedef struct EcGraph EcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses one graph6 record (short or long form) into a new graph handle.
// The record must be NUL-terminated. On success `*out` owns the graph;
// release it with `ec_graph_free`.
//
// # Safety
// `record` must point to a valid NUL-terminated string and `out` to a
// writable pointer slot.
enum EcStatus ec_graph_from_graph6(const char *record, struct EcGraph **out);

// Builds a graph from an edge list: `edges` holds `2 * edge_count`
// endpoints, pairwise. Loops and out-of-range endpoints are rejected.
//
// # Safety
// `edges` must point to `2 * edge_count` readable entries (may be NULL
// when `edge_count` is 0) and `out` to a writable pointer slot.
enum EcStatus ec_graph_from_edge_list(size_t vertex_count,
                                      const size_t *edges,
                                      size_t edge_count,
                                      struct EcGraph **out);

// Releases a graph handle. NULL is a no-op.
//
// # Safety
// `g` must be NULL or a pointer previously returned by a graph
// constructor, not yet freed.
void ec_graph_free(struct EcGraph *g);

// # Safety
// `g` must be a live graph handle.
size_t ec_graph_vertex_count(const struct EcGraph *g);

// # Safety
// `g` must be a live graph handle.
size_t ec_graph_edge_count(const struct EcGraph *g);

// # Safety
// `g` must be a live graph handle.
size_t ec_graph_min_degree(const struct EcGraph *g);

// # Safety
// `g` must be a live graph handle; out-of-range vertices return false.
bool ec_graph_has_edge(const struct EcGraph *g, size_t u, size_t v);

// Writes the short-form graph6 record of the graph as a NUL-terminated
// string into `buf`. Fails with `BufferTooSmall` unless `cap` covers the
// record plus the terminator; `UnsupportedSize` above 62 vertices.
//
// # Safety
// `g` must be a live graph handle and `buf` writable for `cap` bytes.
enum EcStatus ec_graph_to_graph6(const struct EcGraph *g, char *buf, size_t cap);

// Classifies the graph. On success `*out` owns the certificate; release
// it with `ec_certificate_free`. `NoCertificate` would disprove the
// exhaustiveness of the certificate union; `InvalidArgument` marks the
// vertexless graph, which no certificate can describe.
//
// # Safety
// `g` must be a live graph handle and `out` a writable pointer slot.
enum EcStatus ec_classify(const struct EcGraph *g, struct EcCertificate **out);

// Releases a certificate handle. NULL is a no-op.
//
// # Safety
// `cert` must be NULL or a pointer returned by `ec_classify`, not yet
// freed.
void ec_certificate_free(struct EcCertificate *cert);

// # Safety
// `cert` must be a live certificate handle.
enum EcCertificateKind ec_certificate_kind(const struct EcCertificate *cert);

// Number of vertices in the witness (1 for a low-degree certificate).
//
// # Safety
// `cert` must be a live certificate handle.
size_t ec_certificate_witness_len(const struct EcCertificate *cert);

// Copies the witness vertex sequence into `buf`.
//
// # Safety
// `cert` must be a live certificate handle and `buf` writable for `cap`
// entries.
enum EcStatus ec_certificate_witness(const struct EcCertificate *cert, size_t *buf, size_t cap);

// Re-checks a certificate against a graph from raw adjacency, sharing no
// code with the searches that produced it.
//
// # Safety
// Both handles must be live.
bool ec_verify_certificate(const struct EcGraph *g, const struct EcCertificate *cert);

// Looks for a cycle of length exactly `k` (`k >= 3`). On success the
// cycle's vertices are copied into `buf` and `*found_len` is set to `k`;
// `NotFound` reports a clean miss.
//
// # Safety
// `g` must be a live graph handle, `buf` writable for `cap` entries, and
// `found_len` a writable slot.
enum EcStatus ec_find_cycle_of_length(const struct EcGraph *g,
                                      size_t k,
                                      size_t *buf,
                                      size_t cap,
                                      size_t *found_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EVENCYCLE_H */
