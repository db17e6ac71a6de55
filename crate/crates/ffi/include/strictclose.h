#ifndef STRICTCLOSE_H
#define STRICTCLOSE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum ScStatus {
  SC_STATUS_OK = 0,
  SC_STATUS_NULL_POINTER = 1,
  SC_STATUS_INVALID_INPUT = 2,
  SC_STATUS_PARSE = 3,
  SC_STATUS_DIMENSION_MISMATCH = 4,
  SC_STATUS_NOT_CONTAINED = 5,
  SC_STATUS_FRACTION_GROUP_MISMATCH = 6,
  SC_STATUS_OUTSIDE_BOX = 7,
  SC_STATUS_OVERFLOW = 8,
  SC_STATUS_INVALID_COMPLEX = 9,
  SC_STATUS_BUFFER_TOO_SMALL = 10,
  SC_STATUS_PANIC = 11,
} ScStatus;

/**
 * Three-way answer, numbered like the command-line exit codes.
 */
typedef enum ScVerdict {
  SC_VERDICT_HOLDS = 0,
  SC_VERDICT_FAILS = 1,
  SC_VERDICT_INDETERMINATE = 2,
} ScVerdict;

/**
 * Opaque monomial algebra.
 */
typedef struct ScAlgebra ScAlgebra;

/**
 * Opaque simplicial complex.
 */
typedef struct ScComplex ScComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, or NULL. Valid until the next call
 * into this library from the same thread.
 */
const char *sc_last_error_message(void);

/**
 * Parses an algebra file (`ambient d`, `generators`, rows, `end`).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum ScStatus sc_algebra_parse(const char *text, struct ScAlgebra **out);

/**
 * Builds an algebra from `count` generators stored row by row in `coords`
 * (`count * dim` entries).
 *
 * # Safety
 * `coords` must point to `count * dim` readable values (it may be NULL when
 * `count` is 0) and `out` must be writable.
 */
enum ScStatus sc_algebra_from_generators(size_t dim,
                                         const uint32_t *coords,
                                         size_t count,
                                         struct ScAlgebra **out);

/**
 * # Safety
 * `a` must be NULL or a handle from this library that was not yet freed.
 */
void sc_algebra_free(struct ScAlgebra *a);

/**
 * Ambient dimension, or 0 for NULL.
 *
 * # Safety
 * `a` must be NULL or a live handle.
 */
size_t sc_algebra_dim(const struct ScAlgebra *a);

/**
 * Number of minimal generators, or 0 for NULL.
 *
 * # Safety
 * `a` must be NULL or a live handle.
 */
size_t sc_algebra_generator_count(const struct ScAlgebra *a);

/**
 * Copies the minimal generators, lexicographically sorted and row by row,
 * into `buf` of length `len >= count * dim`.
 *
 * # Safety
 * `a` must be a live handle and `buf` must hold `len` writable values.
 */
enum ScStatus sc_algebra_generators(const struct ScAlgebra *a, uint32_t *buf, size_t len);

/**
 * The algebra in file format. Free with [`sc_string_free`]; NULL on error.
 *
 * # Safety
 * `a` must be NULL or a live handle.
 */
char *sc_algebra_to_string(const struct ScAlgebra *a);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void sc_string_free(char *s);

/**
 * Whether the monomial with exponent `v` (`dim` entries) lies in the algebra.
 *
 * # Safety
 * `a` must be a live handle, `v` must hold `dim` values, `out` writable.
 */
enum ScStatus sc_algebra_contains(const struct ScAlgebra *a,
                                  const uint32_t *v,
                                  size_t dim,
                                  bool *out);

/**
 * Normalization found inside the box. `complete` may be NULL.
 *
 * # Safety
 * `a` must be a live handle, `bounds` NULL or `dim` values, `out` writable,
 * `complete` NULL or writable.
 */
enum ScStatus sc_normalization(const struct ScAlgebra *a,
                               const uint32_t *bounds,
                               struct ScAlgebra **out,
                               bool *complete);

/**
 * Strict closure of `base` in `ext`, or in the normalization of `base` when
 * `ext` is NULL. `complete` may be NULL.
 *
 * # Safety
 * `base` must be a live handle, `ext` NULL or a live handle, `bounds` NULL
 * or `dim` values, `out` writable, `complete` NULL or writable.
 */
enum ScStatus sc_strict_closure(const struct ScAlgebra *base,
                                const struct ScAlgebra *ext,
                                const uint32_t *bounds,
                                struct ScAlgebra **out,
                                bool *complete);

/**
 * Strict closedness in the normalization.
 *
 * # Safety
 * `a` must be a live handle, `bounds` NULL or `dim` values, `out` writable.
 */
enum ScStatus sc_is_strictly_closed(const struct ScAlgebra *a,
                                    const uint32_t *bounds,
                                    enum ScVerdict *out);

/**
 * Weak-Arf decision (exact in one variable). On `Fails`, the witness
 * `(a, b, c)` is written to `witness` (`3 * dim` values) unless it is NULL.
 *
 * # Safety
 * `a` must be a live handle, `bounds` NULL or `dim` values, `out` writable,
 * `witness` NULL or `3 * dim` writable values.
 */
enum ScStatus sc_weak_arf(const struct ScAlgebra *a,
                          const uint32_t *bounds,
                          enum ScVerdict *out,
                          uint32_t *witness);

/**
 * Whether the maximal ideal times the normalization lies in the algebra.
 *
 * # Safety
 * `a` must be a live handle, `bounds` NULL or `dim` values, `out` writable.
 */
enum ScStatus sc_conductor_criterion(const struct ScAlgebra *a,
                                     const uint32_t *bounds,
                                     enum ScVerdict *out);

/**
 * Parses a complex file (`vertices n`, `facets`, rows, `end`).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum ScStatus sc_complex_parse(const char *text, struct ScComplex **out);

/**
 * Builds a complex from `facet_count` facets; facet `i` has
 * `facet_sizes[i]` consecutive 1-based labels in `labels`.
 *
 * # Safety
 * `facet_sizes` must hold `facet_count` values, `labels` their sum, and
 * `out` must be writable.
 */
enum ScStatus sc_complex_from_facets(size_t n_vertices,
                                     const uint32_t *labels,
                                     const size_t *facet_sizes,
                                     size_t facet_count,
                                     struct ScComplex **out);

/**
 * # Safety
 * `c` must be NULL or a complex handle from this library, not yet freed.
 */
void sc_complex_free(struct ScComplex *c);

/**
 * Strict closedness of the Stanley-Reisner ring; exact.
 *
 * # Safety
 * `c` must be a live complex handle and `out` writable.
 */
enum ScStatus sc_sr_is_strictly_closed(const struct ScComplex *c, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRICTCLOSE_H */
