#ifndef YMSERIES_H
#define YMSERIES_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * `U(n)`.
 */
#define YM_FAMILY_U 0

/**
 * `SU(n)`.
 */
#define YM_FAMILY_SU 1

/**
 * `SO(2n+1)`.
 */
#define YM_FAMILY_SO_ODD 2

/**
 * `SO(2n)`.
 */
#define YM_FAMILY_SO_EVEN 3

/**
 * `Sp(n)`.
 */
#define YM_FAMILY_SP 4

/**
 * `Spin(2n+1)`.
 */
#define YM_FAMILY_SPIN_ODD 5

/**
 * `Spin(2n)`.
 */
#define YM_FAMILY_SPIN_EVEN 6

/**
 * Evaluate both routes and fail unless they agree.
 */
#define YM_ENGINE_BOTH 0

/**
 * The general parabolic sum.
 */
#define YM_ENGINE_GENERAL 1

/**
 * The family-specific closed formula.
 */
#define YM_ENGINE_SPECIALIZED 2

/**
 * Result code of every fallible call.
 */
typedef enum YmStatus {
  YM_STATUS_OK = 0,
  YM_STATUS_NULL_POINTER = 1,
  YM_STATUS_INVALID_ARGUMENT = 2,
  YM_STATUS_UNSUPPORTED = 3,
  YM_STATUS_TOP_CLASS_MISMATCH = 4,
  YM_STATUS_ARITHMETIC = 5,
  YM_STATUS_ENGINE_MISMATCH = 6,
  YM_STATUS_BUFFER_TOO_SMALL = 7,
  YM_STATUS_OVERFLOW = 8,
  YM_STATUS_INTERNAL = 9,
} YmStatus;

/**
 * Opaque handle to an exact rational function in `t`.
 */
typedef struct YmRatFun YmRatFun;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *ym_version(void);

/**
 * Description of the last failure on the calling thread, or an empty string.
 * The pointer stays valid until the next call into the library on this
 * thread.
 */
const char *ym_last_error_message(void);

/**
 * Poincaré series of the flat connections of genus `ell` for the group
 * `family(n)` with topological class `class`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum YmStatus ym_flat_series(uint32_t family,
                             uint32_t n,
                             int64_t class_,
                             uint32_t ell,
                             uint32_t engine,
                             struct YmRatFun **out);

/**
 * Poincaré series of the classifying space of the gauge group of genus `ell`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum YmStatus ym_gauge_series(uint32_t family, uint32_t n, uint32_t ell, struct YmRatFun **out);

/**
 * Checks the stratification recursion to degree `degree` and writes the
 * verdict to `holds`.
 *
 * # Safety
 * `holds` must be a valid pointer to writable storage for one `bool`.
 */
enum YmStatus ym_verify_recursion(uint32_t family,
                                  uint32_t n,
                                  int64_t class_,
                                  uint32_t ell,
                                  uint32_t degree,
                                  bool *holds);

/**
 * Parses the canonical text form, for example `"(1+t^3)/(1-t^2)"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer to
 * writable storage for one handle.
 */
enum YmStatus ym_ratfun_parse(const char *text, struct YmRatFun **out);

/**
 * Product of two rational functions as a new handle.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer to writable
 * storage for one handle.
 */
enum YmStatus ym_ratfun_mul(const struct YmRatFun *a,
                            const struct YmRatFun *b,
                            struct YmRatFun **out);

/**
 * Writes whether `a` and `b` are the same rational function.
 *
 * # Safety
 * `a` and `b` must be live handles and `equal` a valid pointer.
 */
enum YmStatus ym_ratfun_equal(const struct YmRatFun *a, const struct YmRatFun *b, bool *equal);

/**
 * Writes the canonical text form into `buf`. `needed` receives the required
 * size including the terminating NUL; passing a null `buf` with `len == 0`
 * only queries that size.
 *
 * # Safety
 * `f` must be a live handle, `buf` must point to `len` writable bytes or be
 * null, and `needed` must be null or valid.
 */
enum YmStatus ym_ratfun_to_text(const struct YmRatFun *f,
                                char *buf,
                                uintptr_t len,
                                uintptr_t *needed);

/**
 * Same as `ym_ratfun_to_text` with LaTeX output.
 *
 * # Safety
 * See `ym_ratfun_to_text`.
 */
enum YmStatus ym_ratfun_to_latex(const struct YmRatFun *f,
                                 char *buf,
                                 uintptr_t len,
                                 uintptr_t *needed);

/**
 * Writes the power series coefficients of `t^0..t^order` into `out`, which
 * must hold `order + 1` entries.
 *
 * # Safety
 * `f` must be a live handle and `out` must point to `len` writable entries.
 */
enum YmStatus ym_ratfun_series(const struct YmRatFun *f,
                               uint32_t order,
                               int64_t *out,
                               uintptr_t len);

/**
 * Releases a handle. Null is accepted and ignored.
 *
 * # Safety
 * `f` must be null or a handle not yet released.
 */
void ym_ratfun_free(struct YmRatFun *f);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YMSERIES_H */
