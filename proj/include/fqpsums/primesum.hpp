#ifndef FQPSUMS_PRIMESUM_HPP
#define FQPSUMS_PRIMESUM_HPP

#include <cstdint>
#include <optional>

#include "fqpsums/carlitz.hpp"
#include "fqpsums/laurent.hpp"

namespace fqps {

/* Truncation parameters for a numeric sum.  The derived precision is the
 * contract that makes truncation rigorous: every summand omitted by the
 * degree cutoff has u-valuation at least k*(dmax+1), so all reported
 * coefficients are those of the infinite sum. */
struct SumRequest {
    Field field;
    uint32_t k = 1;
    uint32_t dmax = 1;
    bool monic_only = true;
    int64_t precision() const { return int64_t(k) * (int64_t(dmax) + 1); }
};

/* sum of G_p(1/P^k) over irreducibles of degree <= dmax (monic only, or all
 * scalar multiples when monic_only is false), with absolute precision
 * k*(dmax+1).  Work is split into per-degree index blocks processed on
 * `threads` workers; exact coefficients make the merged result independent
 * of the worker count. */
USeries numeric_prime_sum(const SumRequest& req, unsigned threads = 1);

// Goss zeta, truncated: sum of 1/A^k over monic A with deg A <= dmax
// (including A = 1), precision k*(dmax+1)
USeries numeric_zeta(const Field& f, uint32_t k, uint32_t dmax);

/* e_m on the inverse powers, by a bivariate truncated product keeping
 * Z-degrees <= m.  Monic flavor: e_m at (1/A^{q-1}) over monic A, precision
 * (q-1)(dmax+1).  All-A flavor: e_m at (1/A) over all nonzero A, precision
 * dmax+1. */
USeries numeric_e_spec(const Field& f, uint32_t m, uint32_t dmax, bool monic_only);

// number of p-tuples of nonnegative integers with sum r and minimum 0;
// equals the coefficient of U^r in (1-U^p)/(1-U)^p
uint64_t psi_count(uint32_t p, uint32_t r);

struct VerifyReport {
    uint32_t q = 0, k = 0, dmax = 0;
    int64_t precision = 0;
    bool match = false;
    std::optional<int64_t> first_mismatch;
    RatFun exact;
    USeries numeric;
    int64_t millis = 0;
};

// computes the exact sum, expands it to the numeric precision and compares
// coefficient by coefficient
VerifyReport verify(const Field& f, uint32_t k, uint32_t dmax, unsigned threads = 1);

} // namespace fqps

#endif
