/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef SPLITGRAPH_H
#define SPLITGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SgStatus {
  SG_STATUS_OK = 0,
  SG_STATUS_NULL_POINTER = 1,
  SG_STATUS_INVALID_ARGUMENT = 2,
  SG_STATUS_PARSE_ERROR = 3,
  // The graph exceeds a size limit of the requested computation.
  SG_STATUS_CAPACITY = 4,
  // The invariant is undefined for this graph, e.g. an edge cover with an
  // isolated vertex.
  SG_STATUS_UNDEFINED_INVARIANT = 5,
  SG_STATUS_PANIC = 6,
} SgStatus;

typedef enum SgVerdict {
  SG_VERDICT_HOLDS = 0,
  SG_VERDICT_FAILS = 1,
  SG_VERDICT_NOT_APPLICABLE = 2,
} SgVerdict;

// Opaque graph handle. Create with `sg_graph_from_*`, release with
// `sg_graph_free`.
typedef struct SgGraph SgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *sg_last_error_message(void);

// Library version as a static nul-terminated string.
const char *sg_version(void);

// Parses one graph6 string.
//
// # Safety
// `text` must be a valid nul-terminated string; `out` must be writable.
enum SgStatus sg_graph_from_graph6(const char *text, struct SgGraph **out);

// Builds a graph on `n` vertices from `edge_count` pairs laid out as
// `u0, v0, u1, v1, ...`.
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (it may be null
// when `edge_count` is 0); `out` must be writable.
enum SgStatus sg_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct SgGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from this library and not be used afterwards.
void sg_graph_free(struct SgGraph *g);

// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_graph_order(const struct SgGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_graph_edge_count(const struct SgGraph *g, size_t *out);

// graph6 encoding; release the string with `sg_string_free`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_graph_to_graph6(const struct SgGraph *g, char **out);

// # Safety
// `s` must come from this library and not be used afterwards. Null is
// ignored.
void sg_string_free(char *s);

// The splitting graph; copy of vertex `v` is `n + v`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_splitting_graph(const struct SgGraph *g, struct SgGraph **out);

// The pendant-family graph `G_k` of order `n`, for `n <= k <= 2n - 2`.
//
// # Safety
// `out` must be writable.
enum SgStatus sg_counterexample_graph(size_t n, size_t k, struct SgGraph **out);

// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_independence_number(const struct SgGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_vertex_cover_number(const struct SgGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_matching_number(const struct SgGraph *g, size_t *out);

// Fails with `UNDEFINED_INVARIANT` when the graph has an isolated vertex.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_edge_cover_number(const struct SgGraph *g, size_t *out);

// `β₀*` by exhaustive search; orders above 20 give `CAPACITY`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_beta0_star(const struct SgGraph *g, int64_t *out);

// `β₀*` through bipartite matching.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_beta0_star_fast(const struct SgGraph *g, int64_t *out);

// Checks `β₀(S(G)) = n + β₀*(G)`; not applicable to disconnected graphs
// and graphs of order below 2.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum SgStatus sg_verify_main_theorem(const struct SgGraph *g, enum SgVerdict *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPLITGRAPH_H */
