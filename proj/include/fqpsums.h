/* C interface to the prime-polynomial sum library: exact and truncated
 * T^{-1}-adic evaluation of sums of G_p(1/P^k) over irreducible polynomials
 * in F_q[T], Goss zeta truncations, Carlitz data and rational
 * reconstruction.
 *
 * All functions return FQPS_OK on success.  Functions with a char** output
 * allocate a NUL-terminated string that the caller releases with
 * fqps_string_free(); on failure the output is left untouched and
 * fqps_last_error() carries a diagnostic for the calling thread. */
#ifndef FQPSUMS_H
#define FQPSUMS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fqps_status {
    FQPS_OK = 0,
    FQPS_ERR_INVALID_ARGUMENT = 1,
    FQPS_ERR_UNSUPPORTED_EXPONENT = 2, /* k not divisible by q-1 */
    FQPS_ERR_RECONSTRUCTION_FAILED = 3,
    FQPS_ERR_LIMIT_EXCEEDED = 4,
    FQPS_ERR_NOMEM = 5,
    FQPS_ERR_INTERNAL = 6
} fqps_status;

typedef enum fqps_format {
    FQPS_FORMAT_PLAIN = 0,
    FQPS_FORMAT_JSON = 1
} fqps_format;

/* Opaque handle for F_q; immutable and safe to share between threads. */
typedef struct fqps_field fqps_field;

/* q must be a prime power p^e with e <= 8 and q <= 2^20. */
fqps_status fqps_field_create(uint32_t q, fqps_field **out);
void fqps_field_free(fqps_field *field);
uint32_t fqps_field_char(const fqps_field *field);
uint32_t fqps_field_ext_degree(const fqps_field *field);

const char *fqps_status_name(fqps_status status);
/* Message for the most recent failure on this thread. */
const char *fqps_last_error(void);
void fqps_string_free(char *s);

/* Monic irreducibles of degree <= max_degree (or per-degree counts). */
fqps_status fqps_primes(const fqps_field *field, uint32_t max_degree, int count_only,
                        fqps_format format, char **out);

/* Truncated sum of G_p(1/P^k) over irreducibles of degree <= max_degree;
 * monic only unless include_non_monic.  Absolute precision k*(max_degree+1). */
fqps_status fqps_prime_sum(const fqps_field *field, uint32_t k, uint32_t max_degree,
                           int include_non_monic, uint32_t threads,
                           fqps_format format, char **out);

/* Truncated Goss zeta: sum of 1/A^k over monic A of degree <= max_degree. */
fqps_status fqps_zeta(const fqps_field *field, uint32_t k, uint32_t max_degree,
                      fqps_format format, char **out);

/* Exact rational value of the sum over monic irreducibles (requires
 * (q-1) | k), or over all irreducibles when include_non_monic is set. */
fqps_status fqps_exact_sum(const fqps_field *field, uint32_t k, int include_non_monic,
                           fqps_format format, char **out);

/* Closed-form value when k/(q-1) <= 2q/p; *applicable tells whether the
 * range applies (output is "not applicable" / null otherwise). */
fqps_status fqps_closed_form(const fqps_field *field, uint32_t k,
                             fqps_format format, char **out, int *applicable);

/* Exact-vs-numeric cross check; *match reports the comparison outcome.
 * with_millis adds wall-clock timing to the report (off by default so that
 * repeated runs are byte-identical). */
fqps_status fqps_verify(const fqps_field *field, uint32_t k, uint32_t max_degree,
                        uint32_t threads, int with_millis,
                        fqps_format format, char **out, int *match);

/* Rational reconstruction of the truncated sum by Pade approximation with
 * T-degree bounds (num_deg, den_deg). */
fqps_status fqps_reconstruct(const fqps_field *field, uint32_t k, uint32_t max_degree,
                             uint32_t num_deg, uint32_t den_deg, uint32_t threads,
                             fqps_format format, char **out);

/* Carlitz data: D_0..D_{terms-1} and the exponential coefficients 1/D_j. */
fqps_status fqps_carlitz(const fqps_field *field, uint32_t terms,
                         fqps_format format, char **out);

/* Number of p-tuples of nonnegative integers with sum r and minimum 0. */
fqps_status fqps_psi(uint32_t p, uint32_t r, uint64_t *out_count);

#ifdef __cplusplus
}
#endif

#endif /* FQPSUMS_H */
