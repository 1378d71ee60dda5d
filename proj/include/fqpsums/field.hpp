#ifndef FQPSUMS_FIELD_HPP
#define FQPSUMS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace fqps {

/* An element of F_q, q = p^e.  The code packs the coordinate vector
 * (c_0, ..., c_{e-1}) with respect to the basis 1, g, ..., g^{e-1} as
 * c_0 + c_1*p + ... + c_{e-1}*p^{e-1}, so code < q and the zero element
 * has code 0.  All arithmetic goes through the owning Field. */
struct Fq {
    uint32_t code = 0;
    friend bool operator==(Fq a, Fq b) { return a.code == b.code; }
    friend bool operator!=(Fq a, Fq b) { return a.code != b.code; }
};

/* Arithmetic context for F_q with a deterministic construction: the modulus
 * is the lexicographically least monic irreducible of degree e over F_p,
 * coefficients compared from the constant term upward.  Instances are
 * immutable and cheap to copy (shared internals); they may be shared
 * between threads freely. */
class Field {
  public:
    // Builds F_{p^e}. Requires p prime, 1 <= e <= 8, p^e <= 2^20.
    static Field make(uint32_t p, uint32_t e);
    // Factors q and delegates to make(); rejects q that is not a prime power.
    static Field from_order(uint32_t q);

    uint32_t p() const;
    uint32_t e() const;
    uint32_t q() const;
    // Modulus coefficients c_0..c_e over F_p (monic, c_e = 1). For e = 1 the
    // modulus is present but plays no role in the arithmetic.
    const std::vector<uint32_t>& modulus() const;

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    bool is_zero(Fq a) const { return a.code == 0; }

    // The element whose packed coordinate code is `code` (code < q).
    Fq from_code(uint64_t code) const;
    // n mod p, embedded in the prime subfield.
    Fq from_int(int64_t n) const;
    std::vector<uint32_t> coords(Fq a) const;

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const; // throws std::domain_error on 0
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, uint64_t n) const;

    // sum_{a in F_q^x} a^m; equals -1 when (q-1) | m and 0 otherwise.
    Fq units_power_sum(uint64_t m) const;

    // Same mathematical field (equal p, e and modulus).
    bool same(const Field& other) const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

} // namespace fqps

#endif
