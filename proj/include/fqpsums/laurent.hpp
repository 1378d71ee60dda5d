#ifndef FQPSUMS_LAURENT_HPP
#define FQPSUMS_LAURENT_HPP

#include <cstdint>
#include <vector>

#include "fqpsums/ratfun.hpp"

namespace fqps {

/* Truncated Laurent series in u = 1/T with absolute precision: every
 * coefficient of u^j with j < precision() is known exactly, coefficients at
 * exponents below the stored valuation are zero, and exponents >= precision()
 * are unknown.  Stored coefficients run from v to N-1; construction trims
 * leading zeros (raising v) while keeping at least one entry.
 *
 * Precision propagation: add keeps min(N1,N2); mul yields
 * min(N1+v2, N2+v1); inverting a series of valuation v yields precision
 * N - 2v.  All stored coefficients are exact, so arithmetic is
 * order-independent and deterministic. */
class USeries {
  public:
    // coeffs are the coefficients of u^v .. u^{N-1}; requires N > v
    USeries(Field f, int64_t v, int64_t N, std::vector<Fq> coeffs);
    static USeries zero(const Field& f, int64_t N);
    static USeries monomial(const Field& f, int64_t exponent, Fq c, int64_t N);

    const Field& field() const { return field_; }
    int64_t valuation() const { return v_; }
    int64_t precision() const { return N_; }
    const std::vector<Fq>& coeffs() const { return coeffs_; }
    Fq coeff(int64_t exponent) const; // zero below v; throws at >= N
    bool is_zero_within_precision() const;

    USeries operator-() const;
    USeries truncated(int64_t N) const; // lower the precision (N <= precision())
    USeries inverse() const; // throws on a series that is zero within precision
    USeries pow(uint32_t n) const;

    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    friend USeries operator*(const USeries& a, const USeries& b);

    // agreement on the common window: equal coefficients at every exponent
    // below min(N1, N2)
    friend bool agrees(const USeries& a, const USeries& b);
    // strict equality: agreement plus equal precision
    friend bool operator==(const USeries& a, const USeries& b);
    friend bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

  private:
    Field field_;
    int64_t v_, N_;
    std::vector<Fq> coeffs_;
    void normalize();
};

// u-expansion of a rational function, exact through u^{N-1};
// valuation = deg den - deg num for nonzero input
USeries expand(const RatFun& r, int64_t N);
// same, without requiring the quotient in reduced form
USeries expand_quotient(const Poly& num, const Poly& den, int64_t N);
// multiply by an exact rational function: only the valuation shift applies
// to the precision, nothing is lost
USeries mul_exact(const USeries& s, const RatFun& r);
// expansion of 1/(P^k - 1) = sum_{j>=1} P^{-kj}; valuation k*deg P
USeries geometric_inverse_power(const Poly& P, uint32_t k, int64_t N);

} // namespace fqps

#endif
