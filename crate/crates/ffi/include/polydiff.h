#ifndef POLYDIFF_H
#define POLYDIFF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PdStatus {
  PD_STATUS_OK = 0,
  PD_STATUS_NULL_POINTER = 1,
  PD_STATUS_INVALID_ARGUMENT = 2,
  PD_STATUS_DIMENSION_MISMATCH = 3,
  PD_STATUS_DUPLICATE_NODES = 4,
  PD_STATUS_SINGULAR = 5,
  PD_STATUS_FIELD_DEMOTION = 6,
  PD_STATUS_INDEX_OUT_OF_RANGE = 7,
  PD_STATUS_INTERNAL = 8,
} PdStatus;

typedef enum PdBasis {
  PD_BASIS_MONOMIAL = 0,
  PD_BASIS_CHEBYSHEV = 1,
  PD_BASIS_LEGENDRE = 2,
  PD_BASIS_NEWTON = 3,
  PD_BASIS_LAGRANGE = 4,
  PD_BASIS_HERMITE = 5,
  PD_BASIS_BERNSTEIN = 6,
} PdBasis;

typedef enum PdField {
  PD_FIELD_RATIONAL = 0,
  PD_FIELD_REAL = 1,
  PD_FIELD_COMPLEX = 2,
} PdField;

typedef struct PdMatrix PdMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Differentiation matrix (or antiderivative with `pinv`) of a degree-indexed
 * basis in exact rational arithmetic.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum PdStatus pd_matrix_degree(enum PdBasis basis, size_t degree, bool pinv, struct PdMatrix **out);

/**
 * Node-based basis (`Newton`, `Lagrange`, `Hermite`) on double nodes.
 * `confluency` may be null (all ones); only Hermite accepts it.
 *
 * # Safety
 * `nodes` points to `count` doubles, `confluency` is null or points to
 * `count` values, and `out` is writable.
 */
enum PdStatus pd_matrix_nodes_f64(enum PdBasis basis,
                                  const double *nodes,
                                  const size_t *confluency,
                                  size_t count,
                                  bool pinv,
                                  struct PdMatrix **out);

/**
 * Node-based basis on exact rational nodes `num[i] / den[i]`.
 *
 * # Safety
 * `num` and `den` point to `count` values each, `confluency` is null or
 * points to `count` values, and `out` is writable.
 */
enum PdStatus pd_matrix_nodes_rational(enum PdBasis basis,
                                       const int64_t *num,
                                       const int64_t *den,
                                       const size_t *confluency,
                                       size_t count,
                                       bool pinv,
                                       struct PdMatrix **out);

/**
 * # Safety
 * `m` is null or a live handle.
 */
size_t pd_matrix_rows(const struct PdMatrix *m);

/**
 * # Safety
 * `m` is null or a live handle.
 */
size_t pd_matrix_cols(const struct PdMatrix *m);

/**
 * # Safety
 * `m` is a live handle and `out` is writable.
 */
enum PdStatus pd_matrix_field(const struct PdMatrix *m, enum PdField *out);

/**
 * Entry `(i, j)` as a double pair; the imaginary part is zero unless the
 * matrix is complex.
 *
 * # Safety
 * `m` is a live handle; `re` and `im` are writable (`im` may be null).
 */
enum PdStatus pd_matrix_get(const struct PdMatrix *m, size_t i, size_t j, double *re, double *im);

/**
 * Entry `(i, j)` as text (`p/q` for rationals). Free with `pd_string_free`.
 * Returns null on a bad handle or index.
 *
 * # Safety
 * `m` is null or a live handle.
 */
char *pd_matrix_entry_string(const struct PdMatrix *m, size_t i, size_t j);

/**
 * `out = M·v` in double precision. Fails with `PD_STATUS_FIELD_DEMOTION`
 * on complex matrices.
 *
 * # Safety
 * `v` points to `len` doubles and `out` to `out_len` writable doubles.
 */
enum PdStatus pd_matrix_apply_f64(const struct PdMatrix *m,
                                  const double *v,
                                  size_t len,
                                  double *out,
                                  size_t out_len);

/**
 * `‖M‖_∞`, or NaN for a null handle.
 *
 * # Safety
 * `m` is null or a live handle.
 */
double pd_matrix_inf_norm(const struct PdMatrix *m);

/**
 * # Safety
 * `m` is null or a handle from this library that has not been freed.
 */
void pd_matrix_free(struct PdMatrix *m);

/**
 * # Safety
 * `s` is null or a string returned by this library that has not been freed.
 */
void pd_string_free(char *s);

/**
 * Static description of a status code.
 */
const char *pd_status_message(enum PdStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYDIFF_H */
