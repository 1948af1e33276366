#ifndef EFFPCM_H
#define EFFPCM_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Perturbation class of a 4×4 matrix.
 */
typedef enum EffpcmClass {
  EFFPCM_CLASS_TRIPLE = 0,
  EFFPCM_CLASS_DOUBLE_TRIAD = 1,
  EFFPCM_CLASS_DOUBLE_ONE_CYCLE = 2,
  EFFPCM_CLASS_DOUBLE_TWO_CYCLES = 3,
  EFFPCM_CLASS_SIMPLE = 4,
  EFFPCM_CLASS_CONSISTENT = 5,
} EffpcmClass;

/**
 * Result of every fallible call.
 */
typedef enum EffpcmStatus {
  EFFPCM_STATUS_OK = 0,
  EFFPCM_STATUS_NULL_POINTER = 1,
  EFFPCM_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON, numeral or matrix shape.
   */
  EFFPCM_STATUS_PARSE = 3,
  /**
   * Non-positive or non-reciprocal entries.
   */
  EFFPCM_STATUS_INVALID_MATRIX = 4,
  /**
   * Wrong or unsupported dimension.
   */
  EFFPCM_STATUS_DIMENSION = 5,
  /**
   * Non-positive or non-normalized weights.
   */
  EFFPCM_STATUS_INVALID_WEIGHTS = 6,
  /**
   * An index argument outside its range.
   */
  EFFPCM_STATUS_OUT_OF_RANGE = 7,
  /**
   * Any other library error.
   */
  EFFPCM_STATUS_DOMAIN = 8,
  /**
   * A panic was caught at the boundary.
   */
  EFFPCM_STATUS_PANIC = 9,
} EffpcmStatus;

/**
 * Opaque efficient set of a 4×4 matrix, together with the matrix.
 */
typedef struct EffpcmEfficientSet EffpcmEfficientSet;

/**
 * Opaque pairwise comparison matrix.
 */
typedef struct EffpcmMatrix EffpcmMatrix;

/**
 * Opaque weight vector.
 */
typedef struct EffpcmWeights EffpcmWeights;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null after a success.
 *
 * The pointer stays valid until the next `effpcm_*` call on the same thread.
 */
const char *effpcm_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void effpcm_string_free(char *s);

/**
 * Parses a matrix document `{"n": …, "entries": [[…], …]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum EffpcmStatus effpcm_matrix_from_json(const char *json, struct EffpcmMatrix **out);

/**
 * Builds an `n`×`n` matrix from its `n(n−1)/2` upper-triangle entries in row
 * order, each a numeral such as `"3"`, `"2/7"` or `"0.25"`.
 *
 * # Safety
 * `entries` must point to `count` nul-terminated strings; `out` must be writable.
 */
enum EffpcmStatus effpcm_matrix_from_upper(size_t n,
                                           const char *const *entries,
                                           size_t count,
                                           struct EffpcmMatrix **out);

/**
 * # Safety
 * `m` must come from this library and not have been freed. Null is ignored.
 */
void effpcm_matrix_free(struct EffpcmMatrix *m);

/**
 * # Safety
 * `m` must be a live matrix handle; `out` must be writable.
 */
enum EffpcmStatus effpcm_matrix_dimension(const struct EffpcmMatrix *m, size_t *out);

/**
 * Perturbation class of a 4×4 matrix.
 *
 * # Safety
 * `m` must be a live matrix handle; `out` must be writable.
 */
enum EffpcmStatus effpcm_matrix_classify(const struct EffpcmMatrix *m, enum EffpcmClass *out);

/**
 * Parses a weight document `{"w": […]}`: all strings give exact weights,
 * any JSON number makes the vector floating.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum EffpcmStatus effpcm_weights_from_json(const char *json, struct EffpcmWeights **out);

/**
 * Floating weight vector copied from `len` doubles.
 *
 * # Safety
 * `values` must point to `len` doubles; `out` must be writable.
 */
enum EffpcmStatus effpcm_weights_from_f64(const double *values,
                                          size_t len,
                                          struct EffpcmWeights **out);

/**
 * # Safety
 * `w` must come from this library and not have been freed. Null is ignored.
 */
void effpcm_weights_free(struct EffpcmWeights *w);

/**
 * Whether `w` is efficient for `m`, decided on the BCC digraph.
 *
 * # Safety
 * `m` and `w` must be live handles; `out` must be writable.
 */
enum EffpcmStatus effpcm_is_efficient(const struct EffpcmMatrix *m,
                                      const struct EffpcmWeights *w,
                                      bool *out);

/**
 * Builds the three tetrahedra of a 4×4 matrix.
 *
 * # Safety
 * `m` must be a live matrix handle; `out` must be writable.
 */
enum EffpcmStatus effpcm_efficient_set_new(const struct EffpcmMatrix *m,
                                           struct EffpcmEfficientSet **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed. Null is ignored.
 */
void effpcm_efficient_set_free(struct EffpcmEfficientSet *s);

/**
 * Writes vertex `vertex` (0..4) of tetrahedron `cycle` (0..3, canonical
 * order) as the 4 weights into `weights` and its embedded coordinates into `xyz`.
 * Either output may be null.
 *
 * # Safety
 * `s` must be a live handle; non-null outputs must hold 4 and 3 doubles.
 */
enum EffpcmStatus effpcm_efficient_set_vertex(const struct EffpcmEfficientSet *s,
                                              size_t cycle,
                                              size_t vertex,
                                              double *weights,
                                              double *xyz);

/**
 * Whether `w` lies in the efficient set, i.e. in some tetrahedron's region.
 *
 * # Safety
 * `s` and `w` must be live handles; `out` must be writable.
 */
enum EffpcmStatus effpcm_efficient_set_contains(const struct EffpcmEfficientSet *s,
                                                const struct EffpcmWeights *w,
                                                bool *out);

/**
 * The full geometry document as JSON; free it with [`effpcm_string_free`].
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum EffpcmStatus effpcm_efficient_set_to_json(const struct EffpcmEfficientSet *s, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EFFPCM_H */
