#include "fqpsums/symfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqpsums/errors.hpp"

namespace fqps {

namespace {

constexpr uint32_t kUnrestrictedCap = 40;

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void partitions_rec(uint32_t remaining, uint32_t max_part,
                    const std::optional<std::set<uint32_t>>& allowed,
                    Partition& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        if (allowed && !allowed->count(part)) continue;
        current.push_back(part);
        partitions_rec(remaining - part, part, allowed, current, out);
        current.pop_back();
    }
}

Partition merge_parts(const Partition& a, const Partition& b) {
    Partition m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m),
               std::greater<uint32_t>());
    return m;
}

} // namespace

uint32_t partition_weight(const Partition& parts) {
    uint32_t w = 0;
    for (uint32_t p : parts) w += p;
    return w;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        std::greater<uint32_t>());
}

std::vector<Partition> partitions(uint32_t n, const std::optional<std::set<uint32_t>>& allowed) {
    if (!allowed && n > kUnrestrictedCap)
        throw LimitExceeded("partitions: unrestricted enumeration capped at n <= 40");
    std::vector<Partition> out;
    Partition current;
    partitions_rec(n, n == 0 ? 1 : n, allowed, current, out);
    return out;
}

ELinComb ELinComb::e_monomial(const Partition& parts, mpz_class coeff) {
    Partition sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<uint32_t>());
    for (uint32_t p : sorted)
        if (p == 0) throw std::invalid_argument("ELinComb: partition parts must be positive");
    ELinComb r(partition_weight(sorted));
    r.add_term(sorted, coeff);
    return r;
}

mpz_class ELinComb::coefficient(const Partition& parts) const {
    auto it = terms_.find(parts);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void ELinComb::add_term(const Partition& parts, const mpz_class& coeff) {
    if (coeff == 0) return;
    if (partition_weight(parts) != degree_)
        throw std::invalid_argument("ELinComb: partition weight differs from the declared degree");
    auto [it, inserted] = terms_.emplace(parts, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ELinComb ELinComb::operator-() const {
    ELinComb r(degree_);
    for (const auto& [parts, c] : terms_) r.terms_.emplace(parts, -c);
    return r;
}

ELinComb ELinComb::restricted(const std::set<uint32_t>& allowed) const {
    ELinComb r(degree_);
    for (const auto& [parts, c] : terms_) {
        bool ok = true;
        for (uint32_t p : parts)
            if (!allowed.count(p)) { ok = false; break; }
        if (ok) r.terms_.emplace(parts, c);
    }
    return r;
}

ELinComb ELinComb::divided_exact(uint32_t n) const {
    ELinComb r(degree_);
    for (const auto& [parts, c] : terms_) {
        if (!mpz_divisible_ui_p(c.get_mpz_t(), n))
            throw std::logic_error("ELinComb::divided_exact: coefficient not divisible");
        r.terms_.emplace(parts, c / n);
    }
    return r;
}

ELinComb operator+(const ELinComb& a, const ELinComb& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_)
        throw std::invalid_argument("ELinComb: sum of combinations of different degrees");
    ELinComb r = a;
    for (const auto& [parts, c] : b.terms_) r.add_term(parts, c);
    return r;
}

ELinComb operator-(const ELinComb& a, const ELinComb& b) { return a + (-b); }

ELinComb operator*(const ELinComb& a, const ELinComb& b) {
    ELinComb r(a.degree_ + b.degree_);
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_)
            r.add_term(merge_parts(pa, pb), ca * cb);
    return r;
}

bool operator==(const ELinComb& a, const ELinComb& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

ELinComb ELinComb::pow(uint32_t n) const {
    if (n == 0) return unit();
    ELinComb r = *this;
    ELinComb base = *this;
    n -= 1;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

ELinComb power_sum_in_e(uint32_t n, const std::optional<std::set<uint32_t>>& allowed) {
    if (n < 1) throw std::invalid_argument("power_sum_in_e: n must be positive");
    if (!allowed && n > kUnrestrictedCap)
        throw LimitExceeded("power_sum_in_e: unrestricted expansion capped at n <= 40");
    auto admissible = [&](uint32_t part) { return !allowed || allowed->count(part) > 0; };

    std::vector<ELinComb> ps; // ps[i] = p_{i+1}, pruned
    ps.reserve(n);
    for (uint32_t m = 1; m <= n; ++m) {
        ELinComb pm(m);
        if (admissible(m)) {
            mpz_class lead = (m % 2 == 1) ? mpz_class(m) : mpz_class(-int64_t(m));
            pm.add_term(Partition(1, m), lead);
        }
        for (uint32_t i = 1; i < m; ++i) {
            if (!admissible(i)) continue;
            mpz_class sign = (i % 2 == 1) ? 1 : -1;
            ELinComb ei = ELinComb::e_monomial(Partition(1, i), sign);
            pm = pm + ei * ps[m - i - 1];
        }
        ps.push_back(std::move(pm));
    }
    return ps[n - 1];
}

ELinComb gp_expansion(uint32_t p, uint32_t ell, const std::optional<std::set<uint32_t>>& allowed) {
    if (!is_prime_u32(p)) throw std::invalid_argument("gp_expansion: p must be prime");
    if (ell < 1) throw std::invalid_argument("gp_expansion: ell must be positive");
    if (!allowed && p * ell > kUnrestrictedCap)
        throw LimitExceeded("gp_expansion: unrestricted expansion capped at p*ell <= 40");
    ELinComb pl = power_sum_in_e(ell, allowed);
    ELinComb ppl = power_sum_in_e(p * ell, allowed);
    ELinComb diff = pl.pow(p) - ppl;
    return diff.divided_exact(p);
}

mpz_class coefficient(const ELinComb& a, const Partition& parts) {
    Partition sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<uint32_t>());
    return a.coefficient(sorted);
}

Fq evaluate_on_points(const ELinComb& a, const Field& f, const std::vector<Fq>& points) {
    // elementary symmetric values e_0..e_degree on the points, by the
    // truncated product prod_i (1 + x_i Z)
    uint32_t maxm = a.degree();
    std::vector<Fq> e(maxm + 1, f.zero());
    e[0] = f.one();
    for (Fq x : points) {
        for (uint32_t m = maxm; m >= 1; --m)
            e[m] = f.add(e[m], f.mul(x, e[m - 1]));
    }
    Fq acc = f.zero();
    for (const auto& [parts, c] : a.terms()) {
        Fq term = f.from_code(mpz_fdiv_ui(c.get_mpz_t(), f.p()));
        for (uint32_t part : parts) term = f.mul(term, e[part]);
        acc = f.add(acc, term);
    }
    return acc;
}

} // namespace fqps
