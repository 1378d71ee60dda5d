#ifndef FQPSUMS_POLY_HPP
#define FQPSUMS_POLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fqpsums/field.hpp"

namespace fqps {

/* Dense polynomial over F_q in T, constant term first, no trailing zeros.
 * The zero polynomial has an empty coefficient vector and degree() == -1
 * (the "minus infinity" sentinel).  Values are immutable in practice: all
 * arithmetic returns fresh polynomials. */
class Poly {
  public:
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<Fq> coeffs);

    static Poly constant(const Field& f, Fq c);
    static Poly variable(const Field& f); // T
    // convenience: coefficients given as element codes, constant first
    static Poly from_codes(const Field& f, const std::vector<uint64_t>& codes);

    const Field& field() const { return field_; }
    const std::vector<Fq>& coeffs() const { return coeffs_; }
    int64_t degree() const { return int64_t(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const;
    Fq coeff(int64_t i) const;
    Fq leading() const; // throws on zero polynomial
    Fq eval(Fq x) const;

    Poly operator-() const;
    Poly scaled(Fq c) const;
    Poly shifted(uint32_t k) const; // multiply by T^k
    // coefficients of T^i with i reversed: c_i -> c_{deg-i}
    Poly reversed() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    Field field_;
    std::vector<Fq> coeffs_;
    void trim();
};

// quotient and remainder; throws std::domain_error when b is zero
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
// monic greatest common divisor (zero when both inputs are zero)
Poly gcd_poly(const Poly& a, const Poly& b);
Poly pow_poly(const Poly& a, uint32_t n);
// a^n mod m (m nonzero)
Poly powmod(const Poly& a, uint64_t n, const Poly& m);
// substitute another polynomial for T
Poly compose(const Poly& a, const Poly& inner);

/* Rabin test: F of degree d is irreducible iff T^{q^d} = T mod F and
 * gcd(T^{q^{d/r}} - T, F) = 1 for every prime r | d.  The Frobenius chain
 * T^{q^j} mod F is built by iterated q-th powers.  Requires deg F >= 1. */
bool is_irreducible(const Poly& f);

// q^d with an overflow guard
uint64_t monic_count(const Field& f, uint32_t d);
// index -> monic polynomial of degree d; the constant coefficient varies
// fastest as the index increases, then the next coefficient, and so on.
Poly monic_poly_at(const Field& f, uint32_t d, uint64_t index);

/* Stream of all q^d monic polynomials of degree exactly d in the
 * deterministic index order above; d = 0 yields exactly the constant 1. */
class MonicStream {
  public:
    MonicStream(Field f, uint32_t d);
    std::optional<Poly> next();

  private:
    Field field_;
    uint32_t d_;
    uint64_t index_ = 0, count_ = 0;
};

// monic irreducibles of degree d (d >= 1), same order, filtered
class MonicIrreducibleStream {
  public:
    MonicIrreducibleStream(Field f, uint32_t d);
    std::optional<Poly> next();

  private:
    MonicStream inner_;
};

std::vector<Poly> monic_polys_vec(const Field& f, uint32_t d);
std::vector<Poly> monic_irreducibles_vec(const Field& f, uint32_t d);

// checks sum_{e|d} e*N_e = q^d for all d <= dmax, with N_e enumerated
bool irreducible_count_check(const Field& f, uint32_t dmax);

} // namespace fqps

#endif
