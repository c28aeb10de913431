/* C interface to the qdist coding-theory workbench. */

#ifndef QDIST_H
#define QDIST_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Written by the distance calls when the distance is infinite — a zero
// code, or a quantum code with no logical operators.
#define QDIST_DISTANCE_INFINITE UINT64_MAX

// Status of a call across the C boundary.
typedef enum QdistStatus {
  // The call succeeded and its out-parameters are valid.
  QDIST_STATUS_OK = 0,
  // A required pointer argument was null.
  QDIST_STATUS_NULL_ARGUMENT = 1,
  // A text argument was not valid UTF-8.
  QDIST_STATUS_INVALID_UTF8 = 2,
  // A text input was syntactically malformed; see [`qdist_last_error`].
  QDIST_STATUS_FORMAT = 3,
  // The inputs were outside an operation's domain (dimension mismatch,
  // rank deficiency, a composite where a prime is needed, ...).
  QDIST_STATUS_INVALID = 4,
  // An internal panic was caught at the boundary; state is unharmed but
  // the result is unusable.
  QDIST_STATUS_PANIC = 5,
} QdistStatus;

// A binary linear code.
typedef struct QdistCode QdistCode;

// A CSS quantum code.
typedef struct QdistCss QdistCss;

// An undirected graph.
typedef struct QdistGraph QdistGraph;

// A GF(2) matrix.
typedef struct QdistMatrix QdistMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message from the most recent failure on this thread, or null if no
// call has failed yet.  The pointer stays valid until the next failing
// call on the same thread.
const char *qdist_last_error(void);

// Caps oracle worker threads.  Zero or one disables parallelism; results
// never depend on this, only throughput does.
void qdist_set_threads(uintptr_t threads);

// Releases a string returned by this library.  A null `s` is a no-op.
//
// # Safety
// `s` must have been returned by a `qdist_*` call and not freed before.
void qdist_string_free(char *s);

// Parses matrix text — a `rows cols` header, then `rows` lines of `0`/`1`
// characters (`#` comments and blank lines are skipped) — into a new
// handle written to `*out`.
//
// # Safety
// `text` must point to a NUL-terminated string and `out` to writable
// storage for one pointer.
enum QdistStatus qdist_matrix_parse(const char *text, struct QdistMatrix **out);

// Renders a matrix in the same text format `qdist_matrix_parse` reads,
// writing a newly allocated string to `*out`.
//
// # Safety
// `matrix` must be a live handle and `out` writable storage for one
// pointer; release the string with [`qdist_string_free`].
enum QdistStatus qdist_matrix_format(const struct QdistMatrix *matrix, char **out);

// Row count, or 0 for a null handle.
//
// # Safety
// `matrix` must be a live handle or null.
uintptr_t qdist_matrix_rows(const struct QdistMatrix *matrix);

// Column count, or 0 for a null handle.
//
// # Safety
// `matrix` must be a live handle or null.
uintptr_t qdist_matrix_cols(const struct QdistMatrix *matrix);

// The entry at `(row, col)`; false for a null handle or an out-of-range
// index.
//
// # Safety
// `matrix` must be a live handle or null.
bool qdist_matrix_get(const struct QdistMatrix *matrix, uintptr_t row, uintptr_t col);

// Releases a matrix handle.  A null handle is a no-op.
//
// # Safety
// `matrix` must have come from this library and not be freed twice.
void qdist_matrix_free(struct QdistMatrix *matrix);

// Builds the code `{x : Hx = 0}` from a parity-check matrix, writing a
// new handle to `*out`.  `h` need not be full rank; it is reduced.
//
// # Safety
// `h` must be a live matrix handle and `out` writable storage for one
// pointer.
enum QdistStatus qdist_code_from_parity_check(const struct QdistMatrix *h, struct QdistCode **out);

// Block length `n`, or 0 for a null handle.
//
// # Safety
// `code` must be a live handle or null.
uintptr_t qdist_code_n(const struct QdistCode *code);

// Dimension `k`, or 0 for a null handle.
//
// # Safety
// `code` must be a live handle or null.
uintptr_t qdist_code_k(const struct QdistCode *code);

// Writes a handle to the dual code to `*out`.
//
// # Safety
// `code` must be a live handle and `out` writable storage for one pointer.
enum QdistStatus qdist_code_dual(const struct QdistCode *code, struct QdistCode **out);

// Exact minimum distance.  Writes [`QDIST_DISTANCE_INFINITE`] for the
// zero code.  When `out_witness` is non-null it receives a `0`/`1` string
// holding a minimum-weight codeword (null when the distance is infinite);
// release it with [`qdist_string_free`].
//
// # Safety
// `code` must be a live handle, `out_distance` writable storage for one
// `uint64_t`, and `out_witness` null or writable storage for one pointer.
enum QdistStatus qdist_code_distance(const struct QdistCode *code,
                                     uint64_t *out_distance,
                                     char **out_witness);

// Releases a code handle.  A null handle is a no-op.
//
// # Safety
// `code` must have come from this library and not be freed twice.
void qdist_code_free(struct QdistCode *code);

// Builds a CSS code from X and Z checks, writing a new handle to `*out`.
// The rows of `hx` must be orthogonal to the rows of `hz`.
//
// # Safety
// `hx` and `hz` must be live matrix handles and `out` writable storage
// for one pointer.
enum QdistStatus qdist_css_from_pair(const struct QdistMatrix *hx,
                                     const struct QdistMatrix *hz,
                                     struct QdistCss **out);

// The hypergraph product of two full-row-rank parity checks, written to
// `*out` as a CSS code with parameters
// `[[n1 n2 + r1 r2, k1 k2, min(d1, d2)]]`.
//
// # Safety
// `h1` and `h2` must be live matrix handles and `out` writable storage
// for one pointer.
enum QdistStatus qdist_hgp(const struct QdistMatrix *h1,
                           const struct QdistMatrix *h2,
                           struct QdistCss **out);

// Physical qubit count `n`, or 0 for a null handle.
//
// # Safety
// `css` must be a live handle or null.
uintptr_t qdist_css_n(const struct QdistCss *css);

// Logical qubit count `k`, or 0 for a null handle.
//
// # Safety
// `css` must be a live handle or null.
uintptr_t qdist_css_k(const struct QdistCss *css);

// Exact quantum distance: the least weight over X- and Z-type logical
// representatives.  Writes [`QDIST_DISTANCE_INFINITE`] when `k = 0`.  The
// optional witness is a minimum-weight logical operator on the winning
// side.
//
// # Safety
// `css` must be a live handle, `out_distance` writable storage for one
// `uint64_t`, and `out_witness` null or writable storage for one pointer.
enum QdistStatus qdist_css_distance(const struct QdistCss *css,
                                    uint64_t *out_distance,
                                    char **out_witness);

// Releases a CSS handle.  A null handle is a no-op.
//
// # Safety
// `css` must have come from this library and not be freed twice.
void qdist_css_free(struct QdistCss *css);

// Builds a graph from a symmetric adjacency matrix, writing a new handle
// to `*out`.  Diagonal ones are rejected unless `allow_loops` is set.
//
// # Safety
// `adjacency` must be a live matrix handle and `out` writable storage for
// one pointer.
enum QdistStatus qdist_graph_from_adjacency(const struct QdistMatrix *adjacency,
                                            bool allow_loops,
                                            struct QdistGraph **out);

// The polarity graph of the projective plane over GF(p), `p` prime:
// `p^2 + p + 1` vertices, degrees `p` and `p + 1`, no 4-cycles.
//
// # Safety
// `out` must be writable storage for one pointer.
enum QdistStatus qdist_polarity_graph(uint64_t p, struct QdistGraph **out);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `graph` must be a live handle or null.
uintptr_t qdist_graph_n(const struct QdistGraph *graph);

// The graph code `[I | A]` of the graph's adjacency matrix, written to
// `*out` as a `[2n, n]` linear code.
//
// # Safety
// `graph` must be a live handle and `out` writable storage for one
// pointer.
enum QdistStatus qdist_graph_code(const struct QdistGraph *graph, struct QdistCode **out);

// Graph state distance: the least `wt(x OR Ax)` over nonzero `x`.  The
// optional witness is a minimizing `x` (its own weight may be smaller
// than the distance).
//
// # Safety
// `graph` must be a live handle, `out_distance` writable storage for one
// `uint64_t`, and `out_witness` null or writable storage for one pointer.
enum QdistStatus qdist_graph_state_distance(const struct QdistGraph *graph,
                                            uint64_t *out_distance,
                                            char **out_witness);

// X-type graph state distance: the least weight of a nonzero kernel
// vector of the adjacency matrix, or [`QDIST_DISTANCE_INFINITE`] when the
// kernel is trivial.
//
// # Safety
// `graph` must be a live handle, `out_distance` writable storage for one
// `uint64_t`, and `out_witness` null or writable storage for one pointer.
enum QdistStatus qdist_graph_state_x_distance(const struct QdistGraph *graph,
                                              uint64_t *out_distance,
                                              char **out_witness);

// Releases a graph handle.  A null handle is a no-op.
//
// # Safety
// `graph` must have come from this library and not be freed twice.
void qdist_graph_free(struct QdistGraph *graph);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QDIST_H */
