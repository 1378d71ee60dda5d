#ifndef FQPSUMS_RATFUN_HPP
#define FQPSUMS_RATFUN_HPP

#include <cstdint>
#include <vector>

#include "fqpsums/poly.hpp"

namespace fqps {

class USeries;

/* Reduced rational function in F_q(T).  Canonical form: the denominator is
 * monic and coprime to the numerator; zero is 0/1.  Equality is structural
 * on the canonical form. */
class RatFun {
  public:
    explicit RatFun(Field f); // zero
    RatFun(Poly num, Poly den); // reduces and normalizes; throws on zero den
    static RatFun from_poly(Poly p);
    static RatFun constant(const Field& f, Fq c);
    static RatFun one(const Field& f) { return constant(f, f.one()); }

    const Field& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator-() const;
    RatFun inverse() const; // throws on zero
    RatFun pow(uint32_t n) const;
    RatFun scaled(Fq c) const;

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  private:
    Poly num_, den_;
    void normalize();
};

/* G_p(U) = ((1-U^p) - (1-U)^p) / (p (1-U)^p) as a reduced rational function
 * over F_p.  The division by p happens on integer coefficients before
 * reduction mod p; for p = 2 the result is U/(1-U). */
RatFun gp_ratfun(uint32_t p);

// G_p(1/P^k) as a reduced element of F_q(T); requires char F_q = p and
// deg P >= 1.  For p = 2 this is 1/(P^k - 1).
RatFun gp_at_inverse_power(uint32_t p, const Poly& P, uint32_t k);

/* Verifies, as exact identities of rational functions over F_q:
 *   sum_{a in F_q^x} G_p(1/(aX)^k) = GCD(q-1,k) * G_p(1/X^{LCM(q-1,k)})
 * and, in characteristic 2 only, the sharper form
 *   sum_{a in F_q^x} 1/((aX)^k - 1) = 1/(X^{LCM(k,q-1)} - 1). */
bool scaling_identity_check(const Field& f, uint32_t k);

// first n coefficients of the power-series expansion at T = 0;
// requires den(0) != 0
std::vector<Fq> taylor_coeffs(const RatFun& r, size_t n);

/* Rational reconstruction from a truncated series by the extended-Euclidean
 * algorithm on the polynomial ring in u = 1/T.  num_deg/den_deg bound the
 * T-degrees of the result; the series must carry at least
 * num_deg + den_deg + 2 known coefficients beyond its valuation.  Throws
 * ReconstructionFailed when no approximant within the bounds matches the
 * full window. */
RatFun pade_reconstruct(const USeries& s, int64_t num_deg, int64_t den_deg);

} // namespace fqps

#endif
