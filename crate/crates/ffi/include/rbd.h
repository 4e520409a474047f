#ifndef RBD_H
#define RBD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum RbdStatus {
  RBD_STATUS_OK = 0,
  RBD_STATUS_NULL_POINTER = 1,
  RBD_STATUS_INVALID_UTF8 = 2,
  RBD_STATUS_PARSE_ERROR = 3,
  RBD_STATUS_INVALID_ARGUMENT = 4,
  RBD_STATUS_MISSING_COMPONENT = 5,
  RBD_STATUS_MISSING_PROBABILITY = 6,
  RBD_STATUS_NOT_BUILT_UPON = 7,
  RBD_STATUS_CAP_EXCEEDED = 8,
  RBD_STATUS_PANIC = 9,
} RbdStatus;

typedef enum RbdMethod {
  /**
   * Shannon expansion over the canonical form.
   */
  RBD_METHOD_EXACT = 0,
  /**
   * Sum over all component states; at most 20 components.
   */
  RBD_METHOD_BRUTE_FORCE = 1,
} RbdMethod;

/**
 * Opaque probability assignment handle.
 */
typedef struct RbdAssignment RbdAssignment;

/**
 * Opaque diagram handle.
 */
typedef struct RbdDiagram RbdDiagram;

typedef struct RbdMonteCarloReport {
  double estimate;
  double standard_error;
  uint64_t samples;
  uint64_t seed;
} RbdMonteCarloReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or null if none.
 * Valid until the next failing call on the same thread.
 */
const char *rbd_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void rbd_string_free(char *s);

/**
 * Parses an expression. On a parse error the character offset is stored in
 * `error_position` when it is not null.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum RbdStatus rbd_diagram_parse(const char *text, struct RbdDiagram **out, size_t *error_position);

/**
 * # Safety
 * `d` must come from [`rbd_diagram_parse`] and not have been freed. Null is ignored.
 */
void rbd_diagram_free(struct RbdDiagram *d);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum RbdStatus rbd_diagram_render(const struct RbdDiagram *d, char **out);

/**
 * Number of distinct components in the diagram.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum RbdStatus rbd_diagram_component_count(const struct RbdDiagram *d, size_t *out);

/**
 * Structure function under `len` state bytes (0 failed, nonzero functioning),
 * one per component in ascending index order. Writes 0 or 1 to `out`.
 *
 * # Safety
 * `states` must point to `len` readable bytes (or be null with `len == 0`).
 */
enum RbdStatus rbd_diagram_evaluate(const struct RbdDiagram *d,
                                    const uint8_t *states,
                                    size_t len,
                                    uint8_t *out);

/**
 * Truth table as a string of `0`/`1`, entry `k` for state number `k`.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum RbdStatus rbd_diagram_truth_table(const struct RbdDiagram *d, char **out);

/**
 * Equality as Boolean terms.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum RbdStatus rbd_diagram_equal(const struct RbdDiagram *a, const struct RbdDiagram *b, bool *out);

/**
 * Canonical form as the adjacency-list text printed by `rbd canon`.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum RbdStatus rbd_diagram_canonical(const struct RbdDiagram *d, char **out);

/**
 * An empty assignment.
 */
struct RbdAssignment *rbd_assignment_new(void);

/**
 * Parses the `A<k> = <p>` text format.
 *
 * # Safety
 * `text` must be nul-terminated; `out` must be writable.
 */
enum RbdStatus rbd_assignment_parse(const char *text, struct RbdAssignment **out);

/**
 * Sets the probability of `A<index>`.
 *
 * # Safety
 * `a` must be a live handle.
 */
enum RbdStatus rbd_assignment_set(struct RbdAssignment *a, uint32_t index, double probability);

/**
 * # Safety
 * `a` must come from this library and not have been freed. Null is ignored.
 */
void rbd_assignment_free(struct RbdAssignment *a);

/**
 * Probability that the diagram functions.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum RbdStatus rbd_reliability(const struct RbdDiagram *d,
                               const struct RbdAssignment *a,
                               enum RbdMethod method,
                               double *out);

/**
 * Monte Carlo estimate; reproducible for a given seed.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum RbdStatus rbd_reliability_montecarlo(const struct RbdDiagram *d,
                                          const struct RbdAssignment *a,
                                          uint64_t samples,
                                          uint64_t seed,
                                          struct RbdMonteCarloReport *out);

/**
 * Reliability polynomial in the `rbd poly` text format.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum RbdStatus rbd_reliability_polynomial(const struct RbdDiagram *d, char **out);

/**
 * Number of distinct diagrams over `n <= 4` components.
 *
 * # Safety
 * `out` must be writable.
 */
enum RbdStatus rbd_enumerate_classes(uint32_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RBD_H */
