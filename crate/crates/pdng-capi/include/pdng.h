#ifndef PDNG_H
#define PDNG_H

/* Generated by cbindgen from pdng-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum PdngStatus {
  /**
   * Success.
   */
  PDNG_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  PDNG_STATUS_NULL_ARGUMENT = 1,
  /**
   * The graph6 input did not parse.
   */
  PDNG_STATUS_PARSE_ERROR = 2,
  /**
   * A parameter was out of range (order > 62, bad endpoint, loop edge).
   */
  PDNG_STATUS_INVALID_ARGUMENT = 3,
  /**
   * Internal failure; a bug in this library.
   */
  PDNG_STATUS_INTERNAL = 4,
} PdngStatus;

/**
 * Opaque graph handle.
 */
typedef struct PdngGraph PdngGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse one graph6 line (strict: padding bits must be zero) into a new
 * graph handle.
 */
enum PdngStatus pdng_graph_from_graph6(const char *line, struct PdngGraph **out);

/**
 * Build a graph on `n` vertices from `num_edges` pairs laid out flat as
 * u0,v0,u1,v1,... Duplicate edges are fine; loops are rejected.
 */
enum PdngStatus pdng_graph_build(uint32_t n,
                                 const uint32_t *edges,
                                 size_t num_edges,
                                 struct PdngGraph **out);

/**
 * Free a graph handle. Null is a no-op.
 */
void pdng_graph_free(struct PdngGraph *g);

/**
 * Number of vertices, or -1 if the handle is null.
 */
int32_t pdng_graph_order(const struct PdngGraph *g);

/**
 * Number of edges, or -1 if the handle is null.
 */
int32_t pdng_graph_size(const struct PdngGraph *g);

/**
 * New handle holding the complement graph.
 */
enum PdngStatus pdng_graph_complement(const struct PdngGraph *g, struct PdngGraph **out);

/**
 * Canonical-size graph6 encoding of the graph (caller frees).
 */
enum PdngStatus pdng_graph_to_graph6(const struct PdngGraph *g, char **out);

/**
 * Exact power domination number; `witness` (optional) receives one optimal
 * set as a bitmask.
 */
enum PdngStatus pdng_gamma_p(const struct PdngGraph *g, uint32_t *value, uint64_t *witness);

/**
 * Exact domination number; `witness` (optional) receives one optimal set
 * as a bitmask.
 */
enum PdngStatus pdng_gamma(const struct PdngGraph *g, uint32_t *value, uint64_t *witness);

/**
 * Exact zero forcing number; `witness` (optional) receives one optimal set
 * as a bitmask.
 */
enum PdngStatus pdng_zero_forcing(const struct PdngGraph *g, uint32_t *value, uint64_t *witness);

/**
 * Bound-check report for the graph against its complement, as a JSON
 * object (caller frees). `with_gamma` / `with_zero_forcing` add those
 * parameters; `deep_structure` enables the connectivity- and
 * planarity-dependent checks.
 */
enum PdngStatus pdng_ng_report_json(const struct PdngGraph *g,
                                    bool with_gamma,
                                    bool with_zero_forcing,
                                    bool deep_structure,
                                    char **out);

/**
 * Free a string returned by this library. Null is a no-op.
 */
void pdng_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PDNG_H */
