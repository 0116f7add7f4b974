/* Copyright (c) 2026 the subsum authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API for libsubsum: exact invariants, closed-form predictions and the
 * verification harness for subspace sum graphs of F_q^n.
 *
 * Conventions:
 *   - Every function returns a subsum_status; SUBSUM_OK is 0.
 *   - On failure, subsum_last_error() returns a thread-local message.
 *   - Strings handed out through char** are heap-allocated; release them
 *     with subsum_string_free().
 *   - Graph handles are opaque; release with subsum_graph_free().
 *   - Search budgets are given in milliseconds but applied as deterministic
 *     node caps (a fixed nodes-per-ms calibration), so identical inputs give
 *     byte-identical outputs on any machine. Budget 0 means unlimited.
 */

#ifndef SUBSUM_H
#define SUBSUM_H

#include <stdint.h>

#if defined(_WIN32)
#define SUBSUM_API __declspec(dllexport)
#else
#define SUBSUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subsum_status {
  SUBSUM_OK = 0,
  SUBSUM_ERR_INVALID_ARGUMENT = 1,
  SUBSUM_ERR_NOT_PRIME = 2,
  SUBSUM_ERR_DEGREE_OUT_OF_RANGE = 3,
  SUBSUM_ERR_ORDER_TOO_LARGE = 4,
  SUBSUM_ERR_DIVISION_BY_ZERO = 5,
  SUBSUM_ERR_AMBIENT_MISMATCH = 6,
  SUBSUM_ERR_ALREADY_FULL = 7,
  SUBSUM_ERR_RANGE = 8,
  SUBSUM_ERR_TOO_LARGE = 9,
  SUBSUM_ERR_DIMENSION_TOO_SMALL = 10,
  SUBSUM_ERR_DISCONNECTED = 11,
  SUBSUM_ERR_SEARCH_BUDGET_EXCEEDED = 12,
  SUBSUM_ERR_PARITY = 13,
  SUBSUM_ERR_ZERO_ANCHOR = 14,
  SUBSUM_ERR_ALREADY_ADJACENT = 15,
  SUBSUM_ERR_NON_INTEGER_TERM = 16,
  SUBSUM_ERR_INTERNAL = 17
} subsum_status;

SUBSUM_API const char* subsum_version(void);
SUBSUM_API const char* subsum_status_name(subsum_status status);

/* Thread-local message for the most recent failure in this thread. */
SUBSUM_API const char* subsum_last_error(void);

SUBSUM_API void subsum_string_free(char* s);

/* Exact subspace counts as decimal strings. k >= 0 counts k-dimensional
 * subspaces of F_q^n; k < 0 counts the graph vertices (all nontrivial
 * proper subspaces). q must be a prime power. */
SUBSUM_API subsum_status subsum_count(uint32_t q, uint32_t n, int32_t k, char** out_decimal);

/* Closed-form predictions for (n, q), as a text table or versioned JSON. */
SUBSUM_API subsum_status subsum_predict(uint32_t q, uint32_t n, int as_json, char** out);

typedef struct subsum_graph subsum_graph;

/* Builds the subspace sum graph of F_q^n. threads = 0 uses the available
 * parallelism; max_order = 0 uses the default vertex cap (20000). */
SUBSUM_API subsum_status subsum_graph_build(uint32_t q, uint32_t n, uint32_t threads,
                                            uint64_t max_order, subsum_graph** out_graph);
SUBSUM_API void subsum_graph_free(subsum_graph* g);

SUBSUM_API subsum_status subsum_graph_order(const subsum_graph* g, uint64_t* out);
SUBSUM_API subsum_status subsum_graph_edges(const subsum_graph* g, uint64_t* out);

/* Every invariant of the graph (exact solvers, budgeted). */
SUBSUM_API subsum_status subsum_graph_stats(const subsum_graph* g, uint64_t budget_ms,
                                            int as_json, char** out);

/* format: "dot", "json" or "csv". */
SUBSUM_API subsum_status subsum_graph_export(const subsum_graph* g, const char* format,
                                             char** out);

/* Constructive witnesses, verified against the graph. kind is one of:
 * clique | coloring | domination | indep-odd | indep-even | triangle |
 * common-neighbor | c5.
 *   anchor  - nonzero vector for indep-even, as "1,0,0,0" or "1000";
 *             NULL selects e_1.
 *   vertex  - vertex index for triangle; -1 selects vertex 0.
 *   pair_u/pair_v - vertex pair for common-neighbor; -1/-1 selects the
 *             first non-adjacent pair. */
SUBSUM_API subsum_status subsum_witness(const subsum_graph* g, const char* kind,
                                        const char* anchor, int64_t vertex, int64_t pair_u,
                                        int64_t pair_v, int as_json, char** out);

/* Runs the verification harness over a grid ("default" or "n,q;n,q;...").
 * out_text and out_json may each be NULL when not wanted; the grid is
 * evaluated once either way. exit_code: 0 clean, 1 a claim expected to hold
 * failed, 2 any discrepancy present under strict. Timings are omitted from
 * the JSON unless with_timings (they are the only nondeterministic field). */
SUBSUM_API subsum_status subsum_verify(const char* grid, uint64_t budget_ms, uint32_t threads,
                                       int strict, int with_timings, char** out_text,
                                       char** out_json, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* SUBSUM_H */
