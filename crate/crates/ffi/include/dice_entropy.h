#ifndef DICE_ENTROPY_H
#define DICE_ENTROPY_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum DiceStatus {
  DICE_STATUS_OK = 0,
  /**
   * Malformed hypergraph or out-of-range parameter.
   */
  DICE_STATUS_INVALID_INPUT = 1,
  /**
   * Instance exceeds a size cap or enumeration budget.
   */
  DICE_STATUS_CAP_EXCEEDED = 2,
  DICE_STATUS_IO = 3,
  DICE_STATUS_NULL_POINTER = 4,
  /**
   * Text argument is not valid UTF-8.
   */
  DICE_STATUS_UTF8 = 5,
  /**
   * Internal panic caught at the boundary.
   */
  DICE_STATUS_PANIC = 6,
} DiceStatus;

/**
 * Built-in special graphs for [`dice_hypergraph_special`].
 */
typedef enum DiceSpecial {
  /**
   * Perfect matching with every edge doubled (even `n`).
   */
  DICE_SPECIAL_DOUBLE_EDGES = 0,
  /**
   * Star centred at vertex 0 plus the edge `{1, 2}`.
   */
  DICE_SPECIAL_STAR_PLUS_EDGE = 1,
} DiceSpecial;

/**
 * Exact engine selection for [`dice_pmf_exact`].
 */
typedef enum DiceEngine {
  /**
   * Cheapest exact engine that accepts the instance.
   */
  DICE_ENGINE_AUTO = 0,
  DICE_ENGINE_ENUMERATE = 1,
  DICE_ENGINE_INCLUSION_EXCLUSION = 2,
} DiceEngine;

/**
 * Opaque hypergraph handle.
 */
typedef struct DiceHypergraph DiceHypergraph;

/**
 * Opaque exact probability mass function handle.
 */
typedef struct DicePmf DicePmf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the next failing
 * call on the same thread; do not free.
 */
const char *dice_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void dice_string_free(char *s);

/**
 * Builds a hypergraph from `m * r` vertex indices laid out edge after edge.
 *
 * # Safety
 * `vertices` must point to `m * r` readable values; `out` must be writable.
 */
enum DiceStatus dice_hypergraph_new(size_t n,
                                    size_t r,
                                    const size_t *vertices,
                                    size_t m,
                                    struct DiceHypergraph **out);

/**
 * Parses the text (or JSON) hypergraph format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum DiceStatus dice_hypergraph_parse(const char *text, struct DiceHypergraph **out);

/**
 * The `n`-cycle, `n >= 3`.
 *
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_hypergraph_cycle(size_t n, struct DiceHypergraph **out);

/**
 * The circular hypergraph with edges `{i, ..., i + r - 1} mod n`, `n > r >= 2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_hypergraph_circular(size_t n, size_t r, struct DiceHypergraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_hypergraph_special(size_t n,
                                        enum DiceSpecial kind,
                                        struct DiceHypergraph **out);

/**
 * Releases a hypergraph. NULL is ignored.
 *
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void dice_hypergraph_free(struct DiceHypergraph *h);

/**
 * Vertex count; 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t dice_hypergraph_n(const struct DiceHypergraph *h);

/**
 * Edge count; 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t dice_hypergraph_m(const struct DiceHypergraph *h);

/**
 * Edge size; 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t dice_hypergraph_r(const struct DiceHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_hypergraph_degree(const struct DiceHypergraph *h, size_t v, size_t *out);

/**
 * Max degree minus min degree.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_hypergraph_degree_gap(const struct DiceHypergraph *h, size_t *out);

/**
 * Isomorphism-invariant key such as `n4r2:01-01-23-23` (needs `n <= 8`).
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_hypergraph_canonical_key(const struct DiceHypergraph *h, char **out);

/**
 * Text serialization accepted by [`dice_hypergraph_parse`].
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_hypergraph_to_text(const struct DiceHypergraph *h, char **out);

/**
 * Exact law of the number of hit vertices.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_pmf_exact(const struct DiceHypergraph *h,
                               enum DiceEngine engine,
                               struct DicePmf **out);

/**
 * Closed-form law of the colour count of the `n`-cycle.
 *
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_pmf_cycle(uint32_t n, struct DicePmf **out);

/**
 * `Bin(n, 1/2)` conditioned on an even outcome.
 *
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_pmf_binomial_even(uint32_t n, struct DicePmf **out);

/**
 * Releases a law. NULL is ignored.
 *
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void dice_pmf_free(struct DicePmf *p);

/**
 * Number of support points; 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t dice_pmf_len(const struct DicePmf *p);

/**
 * Support point `i` (ascending) and its probability as a double.
 *
 * # Safety
 * `p` must be a live handle; `x` and `prob` must be writable.
 */
enum DiceStatus dice_pmf_get(const struct DicePmf *p, size_t i, int64_t *x, double *prob);

/**
 * Exact probability of support point `i` as `"num/den"`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_pmf_get_exact(const struct DicePmf *p, size_t i, char **out);

/**
 * Shannon entropy in bits.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_pmf_entropy(const struct DicePmf *p, double *out);

/**
 * CSV `x,numerator,denominator,probability_float`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_pmf_to_csv(const struct DicePmf *p, char **out);

/**
 * Monte Carlo estimate of the law as JSON; reproducible given `seed`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_monte_carlo_json(const struct DiceHypergraph *h,
                                      uint64_t samples,
                                      uint64_t seed,
                                      char **out);

/**
 * Exact hit probabilities, mean and variance as JSON (rationals as `"num/den"`).
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_moments_json(const struct DiceHypergraph *h, char **out);

/**
 * Exact entropy and variance against the upper bounds, as JSON.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DiceStatus dice_bounds_json(const struct DiceHypergraph *h, char **out);

/**
 * `1/2 log2(2 pi e (variance + 1/12))`.
 *
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_massey_bound(double variance, double *out);

/**
 * `1/2 log2 n + 1/2 log2(pi e)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_vertex_count_bound(size_t n, double *out);

/**
 * Entropy lower bound for the `n`-cycle.
 *
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_cycle_lower_bound(size_t n, double *out);

/**
 * Exhaustive entropy maximisation over all `(n, m, r)` multi-hypergraphs, as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum DiceStatus dice_search_json(size_t n,
                                 size_t m,
                                 size_t r,
                                 bool up_to_iso,
                                 size_t top_k,
                                 char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DICE_ENTROPY_H */
