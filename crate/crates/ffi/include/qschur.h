#ifndef QSCHUR_H
#define QSCHUR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QschurStatus {
  QSCHUR_STATUS_OK = 0,
  QSCHUR_STATUS_NULL_POINTER = 1,
  QSCHUR_STATUS_INVALID_ARGUMENT = 2,
  /*
   Partition breaks the gap conditions.
   */
  QSCHUR_STATUS_NOT_ADMISSIBLE = 3,
  QSCHUR_STATUS_DECODE_FAILED = 4,
  /*
   Verification ran and the two sides differ.
   */
  QSCHUR_STATUS_DISCREPANCY = 5,
  QSCHUR_STATUS_PANIC = 6,
} QschurStatus;

/*
 Opaque polynomial handle.
 */
typedef struct QschurPoly QschurPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread. Empty if none. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *qschur_last_error(void);

/*
 Library version as a static string.
 */
const char *qschur_version(void);

/*
 Left side of the polynomial identity at `n`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum QschurStatus qschur_lhs(int64_t n, struct QschurPoly **out);

/*
 Right side of the polynomial identity at `n`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum QschurStatus qschur_rhs(int64_t n, struct QschurPoly **out);

/*
 Gaussian binomial `[top, bottom]` in the base `q^modulus`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum QschurStatus qschur_gauss_binomial(int64_t top,
                                        int64_t bottom,
                                        uint32_t modulus,
                                        struct QschurPoly **out);

/*
 Copies `p`.

 # Safety
 `p` must be a live handle or null; `out` valid for a pointer write.
 */
enum QschurStatus qschur_poly_clone(const struct QschurPoly *p, struct QschurPoly **out);

/*
 `out = a + b`.

 # Safety
 `a`, `b` live handles; `out` valid for a pointer write.
 */
enum QschurStatus qschur_poly_add(const struct QschurPoly *a,
                                  const struct QschurPoly *b,
                                  struct QschurPoly **out);

/*
 `out = a - b`.

 # Safety
 As [`qschur_poly_add`].
 */
enum QschurStatus qschur_poly_sub(const struct QschurPoly *a,
                                  const struct QschurPoly *b,
                                  struct QschurPoly **out);

/*
 `out = a * b`.

 # Safety
 As [`qschur_poly_add`].
 */
enum QschurStatus qschur_poly_mul(const struct QschurPoly *a,
                                  const struct QschurPoly *b,
                                  struct QschurPoly **out);

/*
 Writes whether `a == b` to `out`.

 # Safety
 `a`, `b` live handles; `out` valid for a write.
 */
enum QschurStatus qschur_poly_equal(const struct QschurPoly *a,
                                    const struct QschurPoly *b,
                                    bool *out);

/*
 Coefficient of `q^(half_exp/2)` as a decimal string.

 # Safety
 `p` a live handle; `out` valid for a pointer write. Free the string with
 [`qschur_string_free`].
 */
enum QschurStatus qschur_poly_coefficient(const struct QschurPoly *p, int64_t half_exp, char **out);

/*
 Serializes as `[[half_exp, "coefficient"], ...]`.

 # Safety
 As [`qschur_poly_coefficient`].
 */
enum QschurStatus qschur_poly_to_json(const struct QschurPoly *p, char **out);

/*
 Human-readable form, e.g. `1 + q + q^2`.

 # Safety
 As [`qschur_poly_coefficient`].
 */
enum QschurStatus qschur_poly_to_string(const struct QschurPoly *p, char **out);

/*
 Parses the JSON form produced by [`qschur_poly_to_json`].

 # Safety
 `json` a nul-terminated string; `out` valid for a pointer write.
 */
enum QschurStatus qschur_poly_from_json(const char *json, struct QschurPoly **out);

/*
 # Safety
 `p` must come from this library and not be freed twice. Null is a no-op.
 */
void qschur_poly_free(struct QschurPoly *p);

/*
 # Safety
 `s` must come from this library and not be freed twice. Null is a no-op.
 */
void qschur_string_free(char *s);

/*
 Verifies `identity` (e.g. `"SCHUR_POLY"`) at `params_json`
 (e.g. `{"N":3}`) and writes the report JSON. Returns `OK` when verified
 and `DISCREPANCY` when the sides differ; the report is written either way.

 # Safety
 `identity`, `params_json` nul-terminated strings; `out_report` valid for a
 pointer write.
 */
enum QschurStatus qschur_verify_json(const char *identity,
                                     const char *params_json,
                                     char **out_report);

/*
 Writes whether the comma-separated partition satisfies the gap conditions.

 # Safety
 `partition` a nul-terminated string; `out` valid for a write.
 */
enum QschurStatus qschur_is_admissible(const char *partition, bool *out);

/*
 Decodes a partition into `{"n1","n2","m","r","rho2","rho1"}` JSON.

 # Safety
 `partition` a nul-terminated string; `out_json` valid for a pointer write.
 */
enum QschurStatus qschur_bijection_decode(const char *partition, char **out_json);

/*
 Inverse of [`qschur_bijection_decode`]: writes the comma-separated
 partition.

 # Safety
 `encoding_json` a nul-terminated string; `out_partition` valid for a
 pointer write.
 */
enum QschurStatus qschur_bijection_encode(const char *encoding_json, char **out_partition);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QSCHUR_H */
