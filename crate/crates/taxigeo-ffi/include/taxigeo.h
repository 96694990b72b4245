#ifndef TAXIGEO_H
#define TAXIGEO_H

/* Generated by cbindgen from taxigeo-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of a fallible call.
 */
typedef enum TgStatus {
  /**
   * Success.
   */
  TG_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TG_STATUS_NULL_POINTER = 1,
  /**
   * A literal failed to parse (rational, point, line, axis, isometry).
   */
  TG_STATUS_PARSE_ERROR = 2,
  /**
   * The inputs were outside an operation's domain.
   */
  TG_STATUS_DOMAIN_ERROR = 3,
} TgStatus;

/**
 * A taxicab isometry in canonical form (opaque).
 */
typedef struct TgIsometry TgIsometry;

/**
 * An exact point of the taxicab plane (opaque).
 */
typedef struct TgPoint TgPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message from the most recent failure on this thread, as a fresh string
 * the caller releases with [`tg_string_free`]. Empty if nothing failed yet.
 */
char *tg_last_error_message(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string pointer returned by this library, not yet
 * freed.
 */
void tg_string_free(char *s);

/**
 * Parses a point from its `x,y` literal.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid output
 * location.
 */
enum TgStatus tg_point_parse(const char *text, struct TgPoint **out);

/**
 * Builds a point from two rational literals.
 *
 * # Safety
 * As [`tg_point_parse`], for both coordinate strings.
 */
enum TgStatus tg_point_new(const char *x, const char *y, struct TgPoint **out);

/**
 * Canonical `x,y` literal of a point, or null if `p` is null.
 *
 * # Safety
 * `p` must be null or a live point handle.
 */
char *tg_point_format(const struct TgPoint *p);

/**
 * # Safety
 * `p` must be null or a live point handle; it is consumed.
 */
void tg_point_free(struct TgPoint *p);

/**
 * Taxicab distance |Δx| + |Δy| as a rational literal.
 *
 * # Safety
 * `p` and `q` must be live point handles, `out` a valid output location.
 */
enum TgStatus tg_taxicab_distance(const struct TgPoint *p, const struct TgPoint *q, char **out);

/**
 * Squared Euclidean distance as a rational literal.
 *
 * # Safety
 * As [`tg_taxicab_distance`].
 */
enum TgStatus tg_euclidean_distance_squared(const struct TgPoint *p,
                                            const struct TgPoint *q,
                                            char **out);

/**
 * Midpoint of the segment from `p` to `q`.
 *
 * # Safety
 * As [`tg_taxicab_distance`], with `out` receiving a new point handle.
 */
enum TgStatus tg_midpoint(const struct TgPoint *p, const struct TgPoint *q, struct TgPoint **out);

/**
 * Undirected taxicab angle at `vertex` in t-radians (range [0, 4]).
 *
 * # Safety
 * All three points must be live handles, `out` a valid output location.
 */
enum TgStatus tg_angle_measure(const struct TgPoint *vertex,
                               const struct TgPoint *p,
                               const struct TgPoint *q,
                               char **out);

/**
 * Counterclockwise arc from the ray toward `p` to the ray toward `q`
 * (range [0, 8)).
 *
 * # Safety
 * As [`tg_angle_measure`].
 */
enum TgStatus tg_directed_arc(const struct TgPoint *vertex,
                              const struct TgPoint *p,
                              const struct TgPoint *q,
                              char **out);

/**
 * Parses `linear=<name> t=<x>,<y>`.
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string, `out` a valid output
 * location.
 */
enum TgStatus tg_isometry_parse(const char *spec, struct TgIsometry **out);

/**
 * Translation by the vector `v`.
 *
 * # Safety
 * `v` must be a live point handle, `out` a valid output location.
 */
enum TgStatus tg_isometry_translation(const struct TgPoint *v, struct TgIsometry **out);

/**
 * Rotation by 2n t-radians counterclockwise about `center`.
 *
 * # Safety
 * `center` must be a live point handle, `out` a valid output location.
 */
enum TgStatus tg_isometry_rotation_2n(int64_t n,
                                      const struct TgPoint *center,
                                      struct TgIsometry **out);

/**
 * Reflection across the axis direction (`"y=x"`, `"y=-x"`, `"y=0"`,
 * `"x=0"`) through the given point.
 *
 * # Safety
 * `axis` must be a valid string, `through` a live point handle, `out` a
 * valid output location.
 */
enum TgStatus tg_isometry_reflection(const char *axis,
                                     const struct TgPoint *through,
                                     struct TgIsometry **out);

/**
 * Canonical form of `f ∘ g` (g acts first).
 *
 * # Safety
 * `f` and `g` must be live isometry handles, `out` a valid output location.
 */
enum TgStatus tg_isometry_compose(const struct TgIsometry *f,
                                  const struct TgIsometry *g,
                                  struct TgIsometry **out);

/**
 * The inverse isometry.
 *
 * # Safety
 * `f` must be a live isometry handle, `out` a valid output location.
 */
enum TgStatus tg_isometry_invert(const struct TgIsometry *f, struct TgIsometry **out);

/**
 * Applies the isometry to a point.
 *
 * # Safety
 * `f` and `p` must be live handles, `out` a valid output location.
 */
enum TgStatus tg_isometry_apply(const struct TgIsometry *f,
                                const struct TgPoint *p,
                                struct TgPoint **out);

/**
 * Text form `linear=<name> t=<x>,<y>`, or null if `f` is null.
 *
 * # Safety
 * `f` must be null or a live isometry handle.
 */
char *tg_isometry_format(const struct TgIsometry *f);

/**
 * # Safety
 * `f` must be null or a live isometry handle; it is consumed.
 */
void tg_isometry_free(struct TgIsometry *f);

/**
 * Rotates `p` counterclockwise about `center` by `theta` t-radians
 * (a rational literal) along the taxicab circle.
 *
 * # Safety
 * `p` and `center` must be live point handles, `theta` a valid string,
 * `out` a valid output location.
 */
enum TgStatus tg_taxicab_rotate(const struct TgPoint *p,
                                const struct TgPoint *center,
                                const char *theta,
                                struct TgPoint **out);

/**
 * Reflects `p` across a line given in equation form (`y=x`, `x=0`,
 * `y=1/2x-3`, ...).
 *
 * # Safety
 * `p` must be a live point handle, `line` a valid string, `out` a valid
 * output location.
 */
enum TgStatus tg_taxicab_reflect(const struct TgPoint *p, const char *line, struct TgPoint **out);

/**
 * Analyzes the isosceles triangle with the given apex and legs; on success
 * `out` receives the single-line JSON report.
 *
 * # Safety
 * All three points must be live handles, `out` a valid output location.
 */
enum TgStatus tg_triangle_analyze(const struct TgPoint *apex,
                                  const struct TgPoint *p,
                                  const struct TgPoint *q,
                                  char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TAXIGEO_H */
