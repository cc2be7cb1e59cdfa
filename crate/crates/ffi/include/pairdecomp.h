/* Copyright 2026 The pairdecomp Authors. SPDX-License-Identifier: Apache-2.0 */

#ifndef PAIRDECOMP_H
#define PAIRDECOMP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  PD_STATUS_OK = 0,
  PD_STATUS_NULL_POINTER = 1,
  PD_STATUS_INVALID_UTF8 = 2,
  PD_STATUS_PARSE = 3,
  PD_STATUS_INDEX = 4,
  PD_STATUS_DOMAIN = 5,
  PD_STATUS_CAPACITY = 6,
  PD_STATUS_MODE = 7,
  /**
   * A value does not fit in 64-bit numerator and denominator.
   */
  PD_STATUS_OVERFLOW = 8,
  /**
   * The caller's output buffer is shorter than required.
   */
  PD_STATUS_BUFFER_TOO_SMALL = 9,
  PD_STATUS_PANIC = 10,
} PdStatus;

typedef enum {
  PD_METHOD_EXACT = 0,
  PD_METHOD_HEURISTIC = 1,
} PdMethod;

/**
 * Complete cost graph.
 */
typedef struct PdGraph PdGraph;

/**
 * Ranked ballot profile.
 */
typedef struct PdProfile PdProfile;

/**
 * Antisymmetric pairwise vector.
 */
typedef struct PdVector PdVector;

/**
 * `numer / denom` in lowest terms with `denom > 0`.
 */
typedef struct {
  int64_t numer;
  int64_t denom;
} PdRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a
 * success. Valid until the next call into this library on the same thread.
 */
const char *pd_last_error_message(void);

/**
 * Builds a vector on `n` alternatives from `len = n(n-1)/2` entries
 * `d(i, j)`, `i < j`, in lexicographic pair order.
 *
 * # Safety
 * `entries` must point to `len` readable values and `out` to a writable slot.
 */
PdStatus pd_vector_new(uintptr_t n, const PdRational *entries, uintptr_t len, PdVector **out);

/**
 * # Safety
 * `v` must be null or a handle from this library not yet freed.
 */
void pd_vector_free(PdVector *v);

/**
 * Alternative count, or 0 for a null handle.
 *
 * # Safety
 * `v` must be null or a live handle.
 */
uintptr_t pd_vector_n(const PdVector *v);

/**
 * `d(i, j)` for any distinct `i, j`.
 *
 * # Safety
 * `v` must be a live handle and `out` writable.
 */
PdStatus pd_vector_value(const PdVector *v, uintptr_t i, uintptr_t j, PdRational *out);

/**
 * Vertex scores `S_j = sum_k d(j, k)` into `out[0..n]`.
 *
 * # Safety
 * `v` must be a live handle and `out` must hold `len` values.
 */
PdStatus pd_vector_scores(const PdVector *v, PdRational *out, uintptr_t len);

/**
 * Orthogonal split into strongly transitive and cyclic parts; both new
 * handles belong to the caller.
 *
 * # Safety
 * `v` must be a live handle; `st_out` and `cyclic_out` writable.
 */
PdStatus pd_vector_decompose(const PdVector *v, PdVector **st_out, PdVector **cyclic_out);

/**
 * Parses profile text (`COUNT: NAME > ... > NAME` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
PdStatus pd_profile_parse(const char *text_ptr, PdProfile **out);

/**
 * # Safety
 * `p` must be null or a handle from this library not yet freed.
 */
void pd_profile_free(PdProfile *p);

/**
 * Alternative count, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
uintptr_t pd_profile_alternatives(const PdProfile *p);

/**
 * Voter count, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
uint64_t pd_profile_voters(const PdProfile *p);

/**
 * Margins `d(i, j) = support(i over j) - N/2` as a new vector handle.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
PdStatus pd_profile_margins(const PdProfile *p, PdVector **out);

/**
 * Borda tallies into `out[0..n]`.
 *
 * # Safety
 * `p` must be a live handle and `out` must hold `len` values.
 */
PdStatus pd_profile_borda(const PdProfile *p, PdRational *out, uintptr_t len);

/**
 * Dodgson scores (adjacent swaps) into `out[0..n]`.
 *
 * # Safety
 * `p` must be a live handle and `out` must hold `len` values.
 */
PdStatus pd_profile_dodgson(const PdProfile *p, uint64_t *out, uintptr_t len);

/**
 * Parses graph text (`asym N` or `sym N`, then `I J W` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
PdStatus pd_graph_parse(const char *text_ptr, PdGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void pd_graph_free(PdGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uintptr_t pd_graph_n(const PdGraph *g);

/**
 * Length of the walk `vertices[0..len]`, closed back to the start when
 * `closed` is true.
 *
 * # Safety
 * `g` must be a live handle, `vertices` readable for `len`, `out` writable.
 */
PdStatus pd_graph_path_length(const PdGraph *g,
                              const uintptr_t *vertices,
                              uintptr_t len,
                              bool closed,
                              PdRational *out);

/**
 * Hamiltonian circuit by `method`; writes the `n` tour vertices (starting
 * at 0) into `tour_out` and the length into `length_out`.
 *
 * # Safety
 * `g` must be a live handle, `tour_out` must hold `tour_len` values and
 * `length_out` must be writable.
 */
PdStatus pd_graph_circuit(const PdGraph *g,
                          PdMethod method,
                          bool longest,
                          uintptr_t *tour_out,
                          uintptr_t tour_len,
                          PdRational *length_out);

/**
 * Lower bound on the shortest circuit of a symmetric graph.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
PdStatus pd_graph_lower_bound(const PdGraph *g, PdRational *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PAIRDECOMP_H */
