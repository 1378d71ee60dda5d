#ifndef FQPSUMS_CARLITZ_HPP
#define FQPSUMS_CARLITZ_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "fqpsums/laurent.hpp"
#include "fqpsums/ratfun.hpp"
#include "fqpsums/symfun.hpp"

namespace fqps {

// D_0 = 1, D_j = prod_{i=0}^{j-1} (T^{q^j} - T^{q^i}); deg D_j = j q^j,
// capped at 10^5
Poly carlitz_D(const Field& f, uint32_t j);

// Carlitz exponential coefficients [1/D_0, 1/D_1, ..., 1/D_{n-1}]
std::vector<RatFun> carlitz_exp_coeffs(const Field& f, uint32_t n);

/* A homogeneous specialized value: a rational function together with the
 * power of the Carlitz period it carries formally.  Only powers divisible
 * by q-1 arise; the period itself lives in a degree-(q-1) extension and is
 * never materialized. */
struct PibarRat {
    RatFun value;
    uint64_t pibar_degree = 0;
    friend bool operator==(const PibarRat& a, const PibarRat& b) {
        return a.pibar_degree == b.pibar_degree && a.value == b.value;
    }
};

// parts of the form (q^j - 1)/(q - 1) up to max_part, j >= 1
std::set<uint32_t> admissible_parts(const Field& f, uint32_t max_part);

/* e_m evaluated at (1/A^{q-1}) over monic A: zero unless m = (q^j-1)/(q-1),
 * in which case the value is (-1)^m / D_j; the grade is m(q-1) either way. */
PibarRat spec_e_monic(const Field& f, uint32_t m);

// specialization of a homogeneous e-basis combination, coefficients reduced
// mod p at this point and nowhere earlier
PibarRat spec_elincomb(const Field& f, const ELinComb& a);

/* Exact value of sum over monic irreducible P of G_p(1/P^k), as the ratio of
 * the specialized g_p(X^l) expansion to the p-th power of the specialized
 * power sum p_l, where k = (q-1) l.  Throws UnsupportedExponent when
 * (q-1) does not divide k. */
RatFun exact_prime_sum(const Field& f, uint32_t k);

// the two denominator routes of the ratio above; equal by the Frobenius
// identity zeta(pk) = zeta(k)^p, and compared in tests
PibarRat exact_denominator_via_power(const Field& f, uint32_t ell);  // (spec p_l)^p
PibarRat exact_denominator_direct(const Field& f, uint32_t ell);     // spec p_{pl}

/* Closed form: 0 for 1 <= l <= q/p, and (l mod p) D_1^{q+1} / D_2 for
 * q/p < l <= 2q/p (the boundary l = q/p + 1 included); nullopt beyond. */
std::optional<RatFun> closed_form(const Field& f, uint32_t k);

// sum over all irreducibles (not only monic):
// GCD(q-1,k) * exact_prime_sum(LCM(q-1,k))
RatFun exact_all_prime_sum(const Field& f, uint32_t k);

/* Truncated expansion of pibar^{q-1}: -D_1 times the monic sum of 1/A^{q-1}
 * over deg A <= dmax, exact through u^{N-1}.  Throws LimitExceeded when dmax
 * is too small for the requested precision, i.e. when
 * (q-1)(dmax+1) - q < N. */
USeries pibar_qm1_series(const Field& f, int64_t N, uint32_t dmax);

// smallest dmax honoring the contract above, for callers that only know N
uint32_t pibar_dmax_for(const Field& f, int64_t N);

} // namespace fqps

#endif
