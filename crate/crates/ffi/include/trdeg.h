#ifndef TRDEG_H
#define TRDEG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes shared by all functions.
 */
typedef enum TrdegStatus {
  TRDEG_STATUS_OK = 0,
  /*
   The search finished without finding anything within its bounds.
   */
  TRDEG_STATUS_NOT_FOUND = 1,
  TRDEG_STATUS_PARSE = 2,
  TRDEG_STATUS_UNSUPPORTED = 3,
  TRDEG_STATUS_RESOURCE_EXCEEDED = 4,
  TRDEG_STATUS_INVALID_ARGUMENT = 5,
  TRDEG_STATUS_INTERNAL = 6,
  TRDEG_STATUS_NULL_POINTER = 7,
  /*
   A certificate did not pass verification.
   */
  TRDEG_STATUS_REJECTED = 8,
} TrdegStatus;

/*
 A verified submonic dependence certificate.
 */
typedef struct TrdegCertificate TrdegCertificate;

/*
 A parsed coefficient ring or algebra.
 */
typedef struct TrdegRing TrdegRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the last failure on this thread. The pointer stays
 valid until the next library call on the same thread.
 */
const char *trdeg_last_error_message(void);

/*
 Release a string returned by the library.

 # Safety
 `s` must be null or a string obtained from this library, freed once.
 */
void trdeg_string_free(char *s);

/*
 Parse a ring such as `ZZ`, `Zmod(6)` or `Poly(QQ; x,y)`.

 # Safety
 `text` must be a nul-terminated string and `out` a writable pointer.
 */
enum TrdegStatus trdeg_ring_parse(const char *text, struct TrdegRing **out);

/*
 # Safety
 `ring` must be null or a handle from [`trdeg_ring_parse`], freed once.
 */
void trdeg_ring_free(struct TrdegRing *ring);

/*
 Canonical printed form of a ring.

 # Safety
 `ring` must be a live handle.
 */
enum TrdegStatus trdeg_ring_to_string(const struct TrdegRing *ring, char **out);

/*
 Krull dimension of a ring whose dimension is known in closed form.

 # Safety
 `ring` must be a live handle and `out` writable.
 */
enum TrdegStatus trdeg_ring_known_dim(const struct TrdegRing *ring, int64_t *out);

/*
 Search for a submonic relation of total degree at most `max_degree`
 among `n_elems` elements of `algebra`, viewed as a `coeffs`-algebra.
 Returns [`TrdegStatus::NotFound`] when no relation exists within the bound.

 # Safety
 Ring handles must be live, `elems` must point to `n_elems` strings,
 `ordering` must be a string and `out` writable.
 */
enum TrdegStatus trdeg_search(const struct TrdegRing *coeffs,
                              const struct TrdegRing *algebra,
                              const char *const *elems,
                              size_t n_elems,
                              const char *ordering,
                              uint32_t max_degree,
                              struct TrdegCertificate **out);

/*
 Certificate for a pair of integers given in decimal.

 # Safety
 `a` and `b` must be strings and `out` writable.
 */
enum TrdegStatus trdeg_pid_pair(const char *a, const char *b, struct TrdegCertificate **out);

/*
 # Safety
 `cert` must be null or a certificate handle, freed once.
 */
void trdeg_certificate_free(struct TrdegCertificate *cert);

/*
 The relation as a polynomial string.

 # Safety
 `cert` must be a live handle and `out` writable.
 */
enum TrdegStatus trdeg_certificate_poly(const struct TrdegCertificate *cert, char **out);

/*
 # Safety
 `cert` must be a live handle and `out` writable.
 */
enum TrdegStatus trdeg_certificate_to_json(const struct TrdegCertificate *cert, char **out);

/*
 Load a certificate from JSON. Loading re-checks it; a certificate that
 does not verify is returned with [`TrdegStatus::Rejected`] and no handle.

 # Safety
 `json` must be a string and `out` writable.
 */
enum TrdegStatus trdeg_certificate_from_json(const char *json, struct TrdegCertificate **out);

/*
 Re-run verification: [`TrdegStatus::Ok`] or [`TrdegStatus::Rejected`].

 # Safety
 `cert` must be a live handle.
 */
enum TrdegStatus trdeg_certificate_verify(const struct TrdegCertificate *cert);

/*
 Search exponents up to `max_exp` with `prod a_i^{m_i}` in the ideal
 generated by the `a_j * prod_{i<=j} a_i^{m_i}`; on success writes the
 certificate as JSON.

 # Safety
 `ring` must be a live handle, `elems` must point to `n_elems` strings and
 `out_json` must be writable.
 */
enum TrdegStatus trdeg_cl_search_json(const struct TrdegRing *ring,
                                      const char *const *elems,
                                      size_t n_elems,
                                      uint32_t max_exp,
                                      char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRDEG_H */
