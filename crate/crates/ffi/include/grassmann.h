#ifndef GRASSMANN_H
#define GRASSMANN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible call.
typedef enum GrStatus {
  GR_STATUS_OK = 0,
  GR_STATUS_NULL_POINTER = 1,
  GR_STATUS_INVALID_UTF8 = 2,
  GR_STATUS_PARSE_ERROR = 3,
  GR_STATUS_INVALID_ARGUMENT = 4,
  GR_STATUS_ZERO_ELEMENT = 5,
  GR_STATUS_PANIC = 6,
} GrStatus;

// Substitution domain for [`gr_check_identity`].
typedef enum GrDomain {
  GR_DOMAIN_ALL = 0,
  GR_DOMAIN_EVEN = 1,
  GR_DOMAIN_ODD = 2,
} GrDomain;

// Opaque handle to an element of the Grassmann algebra.
typedef struct GrElement GrElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *gr_last_error_message(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void gr_string_free(char *s);

// # Safety
// `p` must be NULL or a handle returned by this library, not yet freed.
void gr_element_free(struct GrElement *p);

// Parses and evaluates an expression over generators `x1..xn`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum GrStatus gr_element_parse(const char *text, uint32_t n, struct GrElement **out);

// The generator `x_index`.
//
// # Safety
// `out` must be writable.
enum GrStatus gr_element_generator(uint32_t index, struct GrElement **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_clone(const struct GrElement *p, struct GrElement **out);

// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum GrStatus gr_element_add(const struct GrElement *a,
                             const struct GrElement *b,
                             struct GrElement **out);

// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum GrStatus gr_element_sub(const struct GrElement *a,
                             const struct GrElement *b,
                             struct GrElement **out);

// Grassmann product `ab`.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum GrStatus gr_element_mul(const struct GrElement *a,
                             const struct GrElement *b,
                             struct GrElement **out);

// `ab - ba`
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum GrStatus gr_element_commutator(const struct GrElement *a,
                                    const struct GrElement *b,
                                    struct GrElement **out);

// `ab + ba`
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum GrStatus gr_element_anticommutator(const struct GrElement *a,
                                        const struct GrElement *b,
                                        struct GrElement **out);

// Terms of even degree.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_even_part(const struct GrElement *p, struct GrElement **out);

// Terms of odd degree.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_odd_part(const struct GrElement *p, struct GrElement **out);

// `p` minus its constant term.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_soul(const struct GrElement *p, struct GrElement **out);

// Left derivative by `x_index`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_left_derivative(const struct GrElement *p,
                                         uint32_t index,
                                         struct GrElement **out);

// Berezin integral over `x_index` (equal to the left derivative).
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_berezin_integral(const struct GrElement *p,
                                          uint32_t index,
                                          struct GrElement **out);

// Writes `p^exponent`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_pow(const struct GrElement *p, uint32_t exponent, struct GrElement **out);

// Exact equality of canonical forms. NULL handles compare unequal.
//
// # Safety
// `a` and `b` must be NULL or live handles.
bool gr_element_equals(const struct GrElement *a, const struct GrElement *b);

// # Safety
// `p` must be NULL or a live handle.
bool gr_element_is_zero(const struct GrElement *p);

// Canonical text form, e.g. `1 + 3*x1*x2`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_to_string(const struct GrElement *p, char **out);

// JSON object keyed by dot-joined monomial indices.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_to_json(const struct GrElement *p, char **out);

// Coefficient of 1, as a rational string such as `7` or `-3/2`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_body(const struct GrElement *p, char **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_is_central(const struct GrElement *p, uint32_t n, bool *out);

// Least `k <= cap` with `p^k = 0`; writes 0 when no such `k` exists.
// Fails with `ZeroElement` for `p = 0`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum GrStatus gr_element_nil_index(const struct GrElement *p, uint32_t cap, uint32_t *out);

// Checks whether the polynomial `text` in `y1, y2, ...` is an identity of
// the algebra on `n` generators. When it fails and `witness` is non-NULL,
// the counterexample is written there as `y1 -> ...` lines.
//
// # Safety
// `text` must be a NUL-terminated string; `holds` must be writable;
// `witness` must be NULL or writable.
enum GrStatus gr_check_identity(const char *text,
                                uint32_t n,
                                enum GrDomain domain,
                                uint64_t trials,
                                uint64_t seed,
                                bool *holds,
                                char **witness);

// Whether the free polynomial `text` in `x1..xn` lies in the ideal
// generated by `x_i x_j + x_j x_i`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum GrStatus gr_in_ideal(const char *text, uint32_t n, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRASSMANN_H */
