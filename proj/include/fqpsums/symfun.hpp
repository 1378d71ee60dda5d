#ifndef FQPSUMS_SYMFUN_HPP
#define FQPSUMS_SYMFUN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "fqpsums/field.hpp"

namespace fqps {

// weakly decreasing sequence of positive integers; the empty partition is
// the multiplicative unit of the e-basis
using Partition = std::vector<uint32_t>;

uint32_t partition_weight(const Partition& parts);

/* Iteration/serialization order for partitions of equal weight:
 * reverse-lexicographic, so (4) comes before (3,1) before (2,2) before
 * (2,1,1) before (1,1,1,1). */
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

// all partitions of n, optionally with every part drawn from `allowed`,
// in the order above; n = 0 yields exactly the empty partition
std::vector<Partition> partitions(uint32_t n,
                                  const std::optional<std::set<uint32_t>>& allowed = std::nullopt);

/* Homogeneous integer linear combination of elementary symmetric monomials
 * e_lambda.  Coefficients are exact integers; reduction mod p happens only
 * when a combination is specialized downstream.  No zero coefficients are
 * stored, and all partitions share the declared degree. */
class ELinComb {
  public:
    explicit ELinComb(uint32_t degree) : degree_(degree) {}
    static ELinComb e_monomial(const Partition& parts, mpz_class coeff = 1);
    static ELinComb unit() { return e_monomial({}); }

    uint32_t degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Partition, mpz_class, PartitionOrder>& terms() const { return terms_; }
    mpz_class coefficient(const Partition& parts) const;

    void add_term(const Partition& parts, const mpz_class& coeff);

    ELinComb operator-() const;
    // keeps only partitions all of whose parts belong to `allowed`
    ELinComb restricted(const std::set<uint32_t>& allowed) const;
    // divides every coefficient by n, throwing std::logic_error on failure
    ELinComb divided_exact(uint32_t n) const;
    ELinComb pow(uint32_t n) const;

    friend ELinComb operator+(const ELinComb& a, const ELinComb& b);
    friend ELinComb operator-(const ELinComb& a, const ELinComb& b);
    // e_lambda * e_mu = e_{lambda union mu}: multiset union of parts
    friend ELinComb operator*(const ELinComb& a, const ELinComb& b);
    friend bool operator==(const ELinComb& a, const ELinComb& b);
    friend bool operator!=(const ELinComb& a, const ELinComb& b) { return !(a == b); }

  private:
    uint32_t degree_;
    std::map<Partition, mpz_class, PartitionOrder> terms_;
};

/* Expansion of the power sum p_n in the e-basis through Newton's recurrence
 *   p_n = (-1)^{n-1} n e_n + sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i}.
 * With `allowed` given, every e-monomial containing a part outside the set
 * is discarded at each step; multiplication only ever appends parts, so the
 * pruned result is exactly the restriction of the full expansion.
 * Unrestricted expansions are capped at n <= 40. */
ELinComb power_sum_in_e(uint32_t n,
                        const std::optional<std::set<uint32_t>>& allowed = std::nullopt);

/* Expansion of g_p(X_1^l, X_2^l, ...) = (p_l^p - p_{pl}) / p in the e-basis,
 * computed with exact integer coefficients; the division by p is asserted
 * exact.  Degree of the result is p*l. */
ELinComb gp_expansion(uint32_t p, uint32_t ell,
                      const std::optional<std::set<uint32_t>>& allowed = std::nullopt);

mpz_class coefficient(const ELinComb& a, const Partition& parts);

// brute-force evaluation on a concrete point multiset: computes each e_m on
// the points and combines with the coefficients reduced mod p
Fq evaluate_on_points(const ELinComb& a, const Field& f, const std::vector<Fq>& points);

} // namespace fqps

#endif
