#ifndef DOMPOLY_H
#define DOMPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  DP_FAMILY_PATH = 0,
  DP_FAMILY_CYCLE = 1,
  /**
   * `K_2` with a path hanging off one end; order at least 4.
   */
  DP_FAMILY_L_GRAPH = 2,
  DP_FAMILY_COMPLETE = 3,
  /**
   * `K_1` joined to `n` disjoint edges (order `2n + 1`).
   */
  DP_FAMILY_FRIENDSHIP = 4,
} DpFamily;

typedef enum {
  DP_STATUS_OK = 0,
  DP_STATUS_NULL_POINTER = 1,
  DP_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed graph text, bad vertex, bad family parameters.
   */
  DP_STATUS_INVALID_INPUT = 3,
  /**
   * Order above the enumeration cap or the 64-vertex limit.
   */
  DP_STATUS_TOO_LARGE = 4,
  /**
   * Index outside `0..=n`.
   */
  DP_STATUS_OUT_OF_RANGE = 5,
  /**
   * A coefficient does not fit in 64 bits; use the string accessor.
   */
  DP_STATUS_OVERFLOW = 6,
  /**
   * The graph has no vertices.
   */
  DP_STATUS_EMPTY_GRAPH = 7,
  /**
   * A Rust panic was caught at the boundary. This is a bug.
   */
  DP_STATUS_PANIC = 99,
} DpStatus;

/**
 * Opaque graph handle.
 */
typedef struct DpGraph DpGraph;

/**
 * Opaque domination profile handle.
 */
typedef struct DpProfile DpProfile;

/**
 * Shape summary of a profile. `mode_min`/`mode_max` bound the mode set.
 */
typedef struct {
  bool unimodal;
  bool logconcave;
  size_t mode_min;
  size_t mode_max;
  /**
   * Whether `lc_witness` holds a failing index.
   */
  bool has_lc_witness;
  size_t lc_witness;
} DpShape;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *dp_last_error_message(void);

/**
 * Library version as a static nul-terminated string.
 */
const char *dp_version(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void dp_string_free(char *s);

/**
 * Parses a graph6 string (orders up to 62).
 *
 * # Safety
 * `text` must be a valid nul-terminated string; `out` must be writable.
 */
DpStatus dp_graph_from_graph6(const char *text, DpGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` endpoints
 * `u0, v0, u1, v1, ...`.
 *
 * # Safety
 * `endpoints` must point to `2 * m` readable values (may be null when `m` is 0).
 */
DpStatus dp_graph_from_edges(size_t n, const size_t *endpoints, size_t m, DpGraph **out);

/**
 * Generates a named family member. For [`DpFamily::Friendship`], `n` is
 * the number of triangles.
 *
 * # Safety
 * `out` must be writable.
 */
DpStatus dp_graph_family(DpFamily family, size_t n, DpGraph **out);

/**
 * Complete multipartite graph with the given part sizes.
 *
 * # Safety
 * `parts` must point to `k` readable values.
 */
DpStatus dp_graph_complete_multipartite(const size_t *parts, size_t k, DpGraph **out);

/**
 * Frees a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed already.
 */
void dp_graph_free(DpGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
DpStatus dp_graph_order(const DpGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
DpStatus dp_graph_edge_count(const DpGraph *g, size_t *out);

/**
 * Fails with [`DpStatus::EmptyGraph`] on the order-0 graph.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
DpStatus dp_graph_min_degree(const DpGraph *g, size_t *out);

/**
 * Whether `2^delta >= n^2`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
DpStatus dp_graph_min_degree_condition(const DpGraph *g, bool *out);

/**
 * graph6 encoding; free the result with [`dp_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
DpStatus dp_graph_to_graph6(const DpGraph *g, char **out);

/**
 * Counts dominating sets of every size by enumeration. `threads` 0 uses
 * the global pool; `cap` 0 uses the default cap of 26 (hard limit 40).
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
DpStatus dp_profile_brute_force(const DpGraph *g, size_t threads, size_t cap, DpProfile **out);

/**
 * Closed-form profile of the complete multipartite graph; no size cap
 * beyond 64 vertices.
 *
 * # Safety
 * `parts` must point to `k` readable values; `out` must be writable.
 */
DpStatus dp_profile_multipartite(const size_t *parts, size_t k, DpProfile **out);

/**
 * Profile of a path, cycle or L graph of any order via the three-term
 * recurrence.
 *
 * # Safety
 * `out` must be writable.
 */
DpStatus dp_profile_recurrence(DpFamily family, size_t n, DpProfile **out);

/**
 * Frees a profile. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not have been freed already.
 */
void dp_profile_free(DpProfile *p);

/**
 * # Safety
 * `p` must be a live profile handle; `out` must be writable.
 */
DpStatus dp_profile_order(const DpProfile *p, size_t *out);

/**
 * Domination number.
 *
 * # Safety
 * `p` must be a live profile handle; `out` must be writable.
 */
DpStatus dp_profile_gamma(const DpProfile *p, size_t *out);

/**
 * `d_i` as a 64-bit integer, or [`DpStatus::Overflow`].
 *
 * # Safety
 * `p` must be a live profile handle; `out` must be writable.
 */
DpStatus dp_profile_coefficient_u64(const DpProfile *p, size_t i, uint64_t *out);

/**
 * `d_i` in decimal; free the result with [`dp_string_free`].
 *
 * # Safety
 * `p` must be a live profile handle; `out` must be writable.
 */
DpStatus dp_profile_coefficient_string(const DpProfile *p, size_t i, char **out);

/**
 * # Safety
 * `p` must be a live profile handle; `out` must be writable.
 */
DpStatus dp_profile_shape(const DpProfile *p, DpShape *out);

/**
 * JSON object `{n, gamma, d, r}` with decimal-string coefficients; free
 * the result with [`dp_string_free`].
 *
 * # Safety
 * `p` must be a live profile handle; `out` must be writable.
 */
DpStatus dp_profile_to_json(const DpProfile *p, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DOMPOLY_H */
