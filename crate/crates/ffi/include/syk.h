#ifndef SYK_H
#define SYK_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SykStatus {
  SYK_STATUS_OK = 0,
  /**
   * A verification ran and found failures; the report is still returned.
   */
  SYK_STATUS_CHECK_FAILED = 1,
  SYK_STATUS_PARSE = 2,
  SYK_STATUS_WRONG_SHAPE = 3,
  SYK_STATUS_OUT_OF_RANGE = 4,
  SYK_STATUS_ORDER_TOO_SMALL = 5,
  SYK_STATUS_INTERNAL = 6,
  SYK_STATUS_NULL_ARGUMENT = 7,
  SYK_STATUS_INVALID_UTF8 = 8,
  SYK_STATUS_PANIC = 9,
} SykStatus;

/**
 * Y(gl(M|N)) with its memoized normal-ordering engine.
 */
typedef struct SykAlgebra SykAlgebra;

/**
 * An algebra together with the Gauss blocks of one composition.
 */
typedef struct SykVerifier SykVerifier;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version string of the library; static, do not free.
 */
const char *syk_version(void);

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into the library from the same thread.
 */
const char *syk_last_error(void);

void syk_string_free(char *s);

enum SykStatus syk_algebra_new(uint32_t m, uint32_t n, struct SykAlgebra **out);

void syk_algebra_free(struct SykAlgebra *a);

/**
 * Normal form of an element given as JSON.
 */
enum SykStatus syk_normal_form(const struct SykAlgebra *a, const char *element, char **out);

/**
 * Product of two elements, in normal form.
 */
enum SykStatus syk_multiply(const struct SykAlgebra *a,
                            const char *left,
                            const char *right,
                            char **out);

/**
 * Builds the Gauss blocks of `mu` (e.g. `"2,1|1"`) to order `k`.
 */
enum SykStatus syk_verifier_new(const char *mu, uint32_t k, struct SykVerifier **out);

void syk_verifier_free(struct SykVerifier *v);

/**
 * Runs a suite (`levi`, `even`, `mn11`, `m2n1`, `thm73`, `lemma72`, `all`).
 * Returns `CheckFailed` with the report when any check fails.
 */
enum SykStatus syk_verifier_run(const struct SykVerifier *v, const char *suite, char **report);

/**
 * Gauss blocks of `mu` as JSON.
 */
enum SykStatus syk_gauss(const char *mu, uint32_t k, char **out);

/**
 * Applies `rho`, `omega`, `phi`, `psi` or `zeta` (with `shift` for the
 * last two) on Y(gl(m|n)) truncated at `k`. `expr` is `t12`, `t12^(2)`
 * or element/series JSON.
 */
enum SykStatus syk_map(const char *name,
                       uint32_t shift,
                       uint32_t m,
                       uint32_t n,
                       uint32_t k,
                       const char *expr,
                       char **out);

/**
 * PBW window summary `{count, rank, span_targets, span_failures, ...}`.
 * `family` is `full`, `D-only`, `E-only`, `F-only` or `t-gens`; `check`
 * is `rank`, `span` or `both`.
 */
enum SykStatus syk_pbw(const char *mu,
                       uint32_t deg,
                       uint32_t len,
                       uint32_t k,
                       const char *family,
                       const char *check,
                       char **out);

/**
 * Graded bracket checks up to graded degree `k_max`.
 */
enum SykStatus syk_graded_check(const char *mu, uint32_t k_max, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYK_H */
