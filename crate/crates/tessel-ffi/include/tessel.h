#ifndef TESSEL_H
#define TESSEL_H

/* Generated by cbindgen from tessel-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum {
  TSLT_OK = 0,
  TSLT_ERR_BAD_SPEC = 1,
  TSLT_ERR_PARSE = 2,
  TSLT_ERR_IO = 3,
  TSLT_ERR_UNSUPPORTED = 4,
  TSLT_ERR_PRECONDITION = 5,
  TSLT_ERR_NULL_ARGUMENT = 6,
  TSLT_ERR_UTF8 = 7,
  TSLT_ERR_OVERFLOW = 8,
} TsltStatus;

/**
 * An embedded graph: a closed tessellation or a patch of an infinite one.
 */
typedef struct TsltGraph TsltGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread; valid until
 * the next failing call.
 */
const char *tessel_last_error(void);

/**
 * Loads a tessellation file in the exchange format.
 *
 * # Safety
 * `path` must be a valid NUL-terminated string; `out` must be a valid
 * pointer. The returned handle is freed with [`tessel_free`].
 */
TsltStatus tessel_load(const char *path, TsltGraph **out);

/**
 * Writes the handle to `path` in canonical exchange format.
 *
 * # Safety
 * `g` must be a live handle from this library; `path` a valid string.
 */
TsltStatus tessel_save(const TsltGraph *g, const char *path);

/**
 * Ball of radius `radius` in the `(p,q)`-regular tessellation
 * (nonpositive corner curvature required).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
TsltStatus tessel_generate_regular_ball(uint32_t p, uint32_t q, uint32_t radius, TsltGraph **out);

/**
 * One of the five platonic solids by name.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string; `out` a valid pointer.
 */
TsltStatus tessel_generate_platonic(const char *name, TsltGraph **out);

/**
 * Releases a handle. Null is allowed.
 *
 * # Safety
 * `g` must come from this library and not be freed twice.
 */
void tessel_free(TsltGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
uint64_t tessel_vertex_count(const TsltGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
uint64_t tessel_edge_count(const TsltGraph *g);

/**
 * Complete faces (all faces of a closed tessellation).
 *
 * # Safety
 * `g` must be a live handle.
 */
uint64_t tessel_face_count(const TsltGraph *g);

/**
 * 1 when curvature is defined at `v` (every vertex of a closed
 * tessellation, interior vertices of a patch), else 0.
 *
 * # Safety
 * `g` must be a live handle.
 */
int32_t tessel_is_interior(const TsltGraph *g, uint32_t v);

/**
 * Euler characteristic of a closed tessellation.
 *
 * # Safety
 * `g` must be a live handle; `out` a valid pointer.
 */
TsltStatus tessel_euler_characteristic(const TsltGraph *g, int64_t *out);

/**
 * Exact curvature sum over all vertices of a closed tessellation (the
 * Gauss–Bonnet value), as numerator/denominator.
 *
 * # Safety
 * `g` must be a live handle; `num`, `den` valid pointers.
 */
TsltStatus tessel_gauss_bonnet(const TsltGraph *g, int64_t *num, uint64_t *den);

/**
 * Exact vertex curvature `1 - d/2 + sum 1/deg(f)` at a covered vertex.
 *
 * # Safety
 * `g` must be a live handle; `num`, `den` valid pointers.
 */
TsltStatus tessel_vertex_curvature(const TsltGraph *g, uint32_t v, int64_t *num, uint64_t *den);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TESSEL_H */
