#ifndef SUPERWEYL_H
#define SUPERWEYL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which invariant family `sw_invariant` evaluates.
 */
typedef enum SwFamily {
  SW_FAMILY_Q = 0,
  SW_FAMILY_P = 1,
  SW_FAMILY_B = 2,
} SwFamily;

/**
 * Result of every fallible call.
 */
typedef enum SwStatus {
  SW_STATUS_OK = 0,
  SW_STATUS_NULL_POINTER = 1,
  SW_STATUS_INVALID_UTF8 = 2,
  SW_STATUS_PARSE_ERROR = 3,
  SW_STATUS_DIVISION_BY_ZERO = 4,
  SW_STATUS_ZERO_KAPPA = 5,
  SW_STATUS_UNKNOWN_VARIABLE = 6,
  SW_STATUS_DIMENSION_MISMATCH = 7,
  SW_STATUS_STEP_LIMIT_EXCEEDED = 8,
  SW_STATUS_INTERNAL_VERIFICATION_FAILED = 9,
  SW_STATUS_NOT_NEGATIVE_SPECIAL = 10,
  SW_STATUS_NOT_POSITIVE_SPECIAL = 11,
  SW_STATUS_CONNECTIVITY_UNVERIFIED = 12,
  SW_STATUS_GENERICITY_EXHAUSTED = 13,
  SW_STATUS_UNSUPPORTED_KAPPA = 14,
  SW_STATUS_DEGENERATE_DENOMINATOR = 15,
  SW_STATUS_PANIC = 16,
} SwStatus;

/**
 * A nonzero rational parameter.
 */
typedef struct SwKappa SwKappa;

/**
 * An enumerated orbit.
 */
typedef struct SwOrbit SwOrbit;

/**
 * A point in `(x, y)` coordinates.
 */
typedef struct SwPoint SwPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next failing call on the same thread; do not free.
 */
const char *sw_last_error_message(void);

/**
 * Library version as a static string; do not free.
 */
const char *sw_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sw_string_free(char *s);

/**
 * Parses `"p"` or `"p/q"`; zero is rejected.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum SwStatus sw_kappa_parse(const char *text, struct SwKappa **out);

/**
 * # Safety
 * `kappa` must come from `sw_kappa_parse` and not have been freed. NULL is ignored.
 */
void sw_kappa_free(struct SwKappa *kappa);

/**
 * Parses `"x=3,4;y=1/2"`.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum SwStatus sw_point_parse(const char *text, struct SwPoint **out);

/**
 * Parses `"u=...;v=..."` and converts to `(x, y)` at `kappa`.
 *
 * # Safety
 * Arguments must be valid; `out` writable.
 */
enum SwStatus sw_point_from_uv(const char *text, const struct SwKappa *kappa, struct SwPoint **out);

/**
 * # Safety
 * `point` must come from this library and not have been freed. NULL is ignored.
 */
void sw_point_free(struct SwPoint *point);

/**
 * Canonical text form `"x=...;y=..."`.
 *
 * # Safety
 * `point` must be valid; `out` writable.
 */
enum SwStatus sw_point_to_string(const struct SwPoint *point, char **out);

/**
 * Classification of `kappa` for `(n, m)` as JSON.
 *
 * # Safety
 * `kappa` must be valid; `out_json` writable.
 */
enum SwStatus sw_classify(const struct SwKappa *kappa, uintptr_t n, uintptr_t m, char **out_json);

/**
 * Enumerates the orbit of `seed`. `cap = 0` selects `(n+m)! + 1`.
 *
 * # Safety
 * Handles must be valid; `out` writable.
 */
enum SwStatus sw_orbit(const struct SwPoint *seed,
                       const struct SwKappa *kappa,
                       uintptr_t cap,
                       struct SwOrbit **out);

/**
 * # Safety
 * `orbit` must come from `sw_orbit` and not have been freed. NULL is ignored.
 */
void sw_orbit_free(struct SwOrbit *orbit);

/**
 * Number of points enumerated; 0 for NULL.
 *
 * # Safety
 * `orbit` must be valid or NULL.
 */
uintptr_t sw_orbit_len(const struct SwOrbit *orbit);

/**
 * Whether enumeration finished below the cap; false for NULL.
 *
 * # Safety
 * `orbit` must be valid or NULL.
 */
bool sw_orbit_is_complete(const struct SwOrbit *orbit);

/**
 * Whether `point` was enumerated; false if either is NULL.
 *
 * # Safety
 * Handles must be valid or NULL.
 */
bool sw_orbit_contains(const struct SwOrbit *orbit, const struct SwPoint *point);

/**
 * Points, edges, completeness and cap as JSON.
 *
 * # Safety
 * `orbit` must be valid; `out_json` writable.
 */
enum SwStatus sw_orbit_to_json(const struct SwOrbit *orbit, char **out_json);

/**
 * Exact equivalence of two points of equal dimensions.
 *
 * # Safety
 * Handles must be valid; `out` writable.
 */
enum SwStatus sw_are_equivalent(const struct SwPoint *a,
                                const struct SwPoint *b,
                                const struct SwKappa *kappa,
                                bool *out);

/**
 * `q_l`, `p_l` or `b_l` at a point, as a `"p/q"` string.
 *
 * # Safety
 * Handles must be valid; `out` writable.
 */
enum SwStatus sw_invariant(enum SwFamily family,
                           const struct SwPoint *point,
                           const struct SwKappa *kappa,
                           uint32_t l,
                           char **out);

/**
 * Lowers `point` to its minimal form in at most `max_steps` moves.
 *
 * # Safety
 * Handles must be valid; `out` and `steps` writable (`steps` may be NULL).
 */
enum SwStatus sw_reduce_to_minimal(const struct SwPoint *point,
                                   const struct SwKappa *kappa,
                                   uintptr_t max_steps,
                                   struct SwPoint **out,
                                   uintptr_t *steps);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SUPERWEYL_H */
