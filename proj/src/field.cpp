#include "fqpsums/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "fqpsums/errors.hpp"

namespace fqps {

namespace {

constexpr uint32_t kMaxOrder = 1u << 20;
constexpr uint32_t kMaxExtDegree = 8;
constexpr uint32_t kTableLimit = 1u << 16; // log/exp tables kept below this order

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- small helpers on polynomials over F_p, coefficients as uint32 residues,
// --- constant term first, no trailing zeros.  Used only during construction.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    ptrim(r);
    return r;
}

uint32_t pinv_scalar(uint32_t a, uint32_t p) {
    // extended Euclid on integers
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t qq = r / nr;
        int64_t t2 = t - qq * nt;
        int64_t r2 = r - qq * nr;
        t = nt; nt = t2;
        r = nr; nr = r2;
    }
    if (t < 0) t += p;
    return uint32_t(t);
}

// a mod b, b nonzero; b need not be monic.
PPoly pmod(PPoly a, const PPoly& b, uint32_t p) {
    uint32_t lead_inv = pinv_scalar(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        uint32_t c = uint32_t((uint64_t(a.back()) * lead_inv) % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = (uint64_t(c) * b[i]) % p;
            a[i + shift] = uint32_t((a[i + shift] + p - sub) % p);
        }
        ptrim(a);
    }
    return a;
}

// Exhaustive irreducibility over F_p by trial division against every monic
// polynomial of degree 1..deg/2.
bool ppoly_irreducible(const PPoly& f, uint32_t p) {
    size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            PPoly div(d + 1, 0);
            uint64_t t = idx;
            for (size_t i = 0; i < d; ++i) { div[i] = uint32_t(t % p); t /= p; }
            div[d] = 1;
            if (pmod(f, div, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

struct Field::Impl {
    uint32_t p = 0, e = 0, q = 0;
    std::vector<uint32_t> modulus; // c_0..c_e over F_p, monic
    std::vector<uint32_t> log_tab; // index: code (1..q-1); log of zero unused
    std::vector<uint32_t> exp_tab; // index: 0..q-2
    bool tables = false;

    std::array<uint32_t, kMaxExtDegree> digits(uint32_t code) const {
        std::array<uint32_t, kMaxExtDegree> d{};
        for (uint32_t i = 0; i < e; ++i) { d[i] = code % p; code /= p; }
        return d;
    }
    uint32_t encode(const std::array<uint32_t, 2 * kMaxExtDegree>& d) const {
        uint32_t code = 0;
        for (uint32_t i = e; i-- > 0;) code = code * p + d[i];
        return code;
    }

    uint32_t add_codes(uint32_t a, uint32_t b) const {
        if (e == 1) { uint32_t s = a + b; return s >= p ? s - p : s; }
        uint32_t code = 0, mulp = 1;
        for (uint32_t i = 0; i < e; ++i) {
            uint32_t s = a % p + b % p;
            if (s >= p) s -= p;
            code += s * mulp;
            mulp *= p;
            a /= p; b /= p;
        }
        return code;
    }

    uint32_t neg_code(uint32_t a) const {
        if (e == 1) return a == 0 ? 0 : p - a;
        uint32_t code = 0, mulp = 1;
        for (uint32_t i = 0; i < e; ++i) {
            uint32_t d = a % p;
            code += (d == 0 ? 0 : p - d) * mulp;
            mulp *= p;
            a /= p;
        }
        return code;
    }

    // schoolbook digit multiplication followed by reduction mod the modulus
    uint32_t mul_codes_generic(uint32_t a, uint32_t b) const {
        auto da = digits(a), db = digits(b);
        std::array<uint32_t, 2 * kMaxExtDegree> prod{};
        for (uint32_t i = 0; i < e; ++i) {
            if (da[i] == 0) continue;
            for (uint32_t j = 0; j < e; ++j)
                prod[i + j] = uint32_t((prod[i + j] + uint64_t(da[i]) * db[j]) % p);
        }
        // reduce: g^e = -(c_0 + c_1 g + ... + c_{e-1} g^{e-1})
        for (uint32_t k = 2 * e - 2; k >= e && k < 2 * e; --k) {
            uint32_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (uint32_t i = 0; i < e; ++i) {
                uint64_t sub = (uint64_t(c) * modulus[i]) % p;
                prod[k - e + i] = uint32_t((prod[k - e + i] + p - sub) % p);
            }
        }
        return encode(prod);
    }

    uint32_t mul_codes(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (e == 1) return uint32_t((uint64_t(a) * b) % p);
        if (tables) {
            uint32_t s = log_tab[a] + log_tab[b];
            if (s >= q - 1) s -= q - 1;
            return exp_tab[s];
        }
        return mul_codes_generic(a, b);
    }

    uint32_t pow_code(uint32_t a, uint64_t n) const {
        if (n == 0) return 1;
        if (a == 0) return 0;
        if (tables) {
            uint64_t l = (uint64_t(log_tab[a]) * (n % (q - 1))) % (q - 1);
            return exp_tab[l];
        }
        uint32_t base = a, r = 1;
        while (n) {
            if (n & 1) r = mul_codes(r, base);
            n >>= 1;
            if (n) base = mul_codes(base, base);
        }
        return r;
    }

    uint32_t inv_code(uint32_t a) const {
        if (a == 0) throw std::domain_error("Field::inv: inverse of zero");
        if (e == 1) return pinv_scalar(a, p);
        if (tables) return exp_tab[(q - 1 - log_tab[a]) % (q - 1)];
        // extended Euclid on the coordinate polynomial and the modulus
        PPoly r0(modulus.begin(), modulus.end());
        PPoly r1; { auto d = digits(a); r1.assign(d.begin(), d.begin() + e); ptrim(r1); }
        PPoly t0, t1{1};
        while (r1.size() > 1 || (r1.size() == 1 && r1[0] != 0)) {
            // one long-division step r0 = qq*r1 + r2
            PPoly r2 = r0, qq;
            uint32_t li = pinv_scalar(r1.back(), p);
            if (r2.size() >= r1.size()) qq.assign(r2.size() - r1.size() + 1, 0);
            while (r2.size() >= r1.size() && !r2.empty()) {
                uint32_t c = uint32_t((uint64_t(r2.back()) * li) % p);
                size_t shift = r2.size() - r1.size();
                qq[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i) {
                    uint64_t sub = (uint64_t(c) * r1[i]) % p;
                    r2[i + shift] = uint32_t((r2[i + shift] + p - sub) % p);
                }
                ptrim(r2);
            }
            ptrim(qq);
            // t2 = t0 - qq*t1
            PPoly qt = pmul(qq, t1, p);
            PPoly t2(std::max(t0.size(), qt.size()), 0);
            for (size_t i = 0; i < t2.size(); ++i) {
                uint32_t x = i < t0.size() ? t0[i] : 0;
                uint32_t y = i < qt.size() ? qt[i] : 0;
                t2[i] = (x + p - y) % p;
            }
            ptrim(t2);
            r0 = std::move(r1); r1 = std::move(r2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        // r0 is a nonzero constant gcd; scale t0 by its inverse
        uint32_t s = pinv_scalar(r0[0], p);
        std::array<uint32_t, 2 * kMaxExtDegree> d{};
        for (size_t i = 0; i < t0.size() && i < e; ++i) d[i] = uint32_t((uint64_t(t0[i]) * s) % p);
        return encode(d);
    }
};

Field Field::make(uint32_t p, uint32_t e) {
    if (!is_prime_u32(p)) throw std::invalid_argument("Field::make: p is not prime");
    if (e < 1 || e > kMaxExtDegree) throw LimitExceeded("Field::make: extension degree out of range [1,8]");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw LimitExceeded("Field::make: field order exceeds 2^20");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->q = uint32_t(q);

    // lexicographically least monic irreducible of degree e, constant
    // coefficient compared first
    {
        uint64_t count = 1;
        for (uint32_t i = 0; i < e; ++i) count *= p;
        bool found = false;
        for (uint64_t lex = 0; lex < count && !found; ++lex) {
            PPoly cand(e + 1, 0);
            uint64_t t = lex;
            for (uint32_t i = e; i-- > 0;) { cand[i] = uint32_t(t % p); t /= p; }
            cand[e] = 1;
            if (ppoly_irreducible(cand, p)) {
                impl->modulus.assign(cand.begin(), cand.end());
                found = true;
            }
        }
        if (!found) throw std::logic_error("Field::make: no irreducible modulus found");
    }

    if (e >= 2 && q < kTableLimit) {
        // find a multiplicative generator, then fill log/exp tables
        uint32_t qm1 = impl->q - 1;
        std::vector<uint32_t> prime_factors;
        {
            uint32_t m = qm1;
            for (uint32_t d = 2; d * d <= m; ++d)
                if (m % d == 0) { prime_factors.push_back(d); while (m % d == 0) m /= d; }
            if (m > 1) prime_factors.push_back(m);
        }
        uint32_t gen = 0;
        for (uint32_t cand = 2; cand < impl->q; ++cand) {
            bool ok = true;
            for (uint32_t r : prime_factors)
                if (impl->pow_code(cand, qm1 / r) == 1) { ok = false; break; }
            if (ok) { gen = cand; break; }
        }
        impl->exp_tab.resize(qm1);
        impl->log_tab.assign(impl->q, 0);
        uint32_t cur = 1;
        for (uint32_t i = 0; i < qm1; ++i) {
            impl->exp_tab[i] = cur;
            impl->log_tab[cur] = i;
            cur = impl->mul_codes_generic(cur, gen);
        }
        impl->tables = true;
    }

    return Field(std::move(impl));
}

Field Field::from_order(uint32_t q) {
    if (q < 2) throw std::invalid_argument("Field::from_order: q must be at least 2");
    uint32_t p = 2;
    while (q % p != 0) {
        ++p;
        if (uint64_t(p) * p > q) { p = q; break; } // q prime
    }
    uint32_t e = 0;
    uint32_t m = q;
    while (m % p == 0) { m /= p; ++e; }
    if (m != 1) throw std::invalid_argument("Field::from_order: q is not a prime power");
    return make(p, e);
}

uint32_t Field::p() const { return impl_->p; }
uint32_t Field::e() const { return impl_->e; }
uint32_t Field::q() const { return impl_->q; }
const std::vector<uint32_t>& Field::modulus() const { return impl_->modulus; }

Fq Field::from_code(uint64_t code) const {
    if (code >= impl_->q) throw std::invalid_argument("Field::from_code: code out of range");
    return Fq{uint32_t(code)};
}

Fq Field::from_int(int64_t n) const {
    int64_t r = n % int64_t(impl_->p);
    if (r < 0) r += impl_->p;
    return Fq{uint32_t(r)};
}

std::vector<uint32_t> Field::coords(Fq a) const {
    std::vector<uint32_t> c(impl_->e);
    uint32_t code = a.code;
    for (uint32_t i = 0; i < impl_->e; ++i) { c[i] = code % impl_->p; code /= impl_->p; }
    return c;
}

Fq Field::add(Fq a, Fq b) const { return Fq{impl_->add_codes(a.code, b.code)}; }
Fq Field::neg(Fq a) const { return Fq{impl_->neg_code(a.code)}; }
Fq Field::sub(Fq a, Fq b) const { return Fq{impl_->add_codes(a.code, impl_->neg_code(b.code))}; }
Fq Field::mul(Fq a, Fq b) const { return Fq{impl_->mul_codes(a.code, b.code)}; }
Fq Field::inv(Fq a) const { return Fq{impl_->inv_code(a.code)}; }
Fq Field::pow(Fq a, uint64_t n) const { return Fq{impl_->pow_code(a.code, n)}; }

Fq Field::units_power_sum(uint64_t m) const {
    Fq s = zero();
    for (uint32_t c = 1; c < impl_->q; ++c) s = add(s, pow(Fq{c}, m));
    return s;
}

bool Field::same(const Field& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->e == other.impl_->e &&
           impl_->modulus == other.impl_->modulus;
}

} // namespace fqps
