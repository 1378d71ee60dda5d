#include "fqpsums/ratfun.hpp"

#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

#include "fqpsums/errors.hpp"
#include "fqpsums/laurent.hpp"

namespace fqps {

RatFun::RatFun(Field f) : num_(f), den_(Poly::constant(f, f.one())) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!num_.field().same(den_.field()))
        throw std::invalid_argument("RatFun: numerator and denominator fields differ");
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    const Field& f = num_.field();
    if (num_.is_zero()) {
        den_ = Poly::constant(f, f.one());
        return;
    }
    Poly g = gcd_poly(num_, den_);
    if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
    }
    Fq lead_inv = f.inv(den_.leading());
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RatFun RatFun::from_poly(Poly p) {
    Field f = p.field();
    return RatFun(std::move(p), Poly::constant(f, f.one()));
}

RatFun RatFun::constant(const Field& f, Fq c) {
    return RatFun(Poly::constant(f, c), Poly::constant(f, f.one()));
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("RatFun::inverse: zero");
    return RatFun(den_, num_);
}

RatFun RatFun::scaled(Fq c) const {
    return RatFun(num_.scaled(c), den_);
}

RatFun RatFun::pow(uint32_t n) const {
    RatFun r = RatFun::one(field());
    RatFun base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFun gp_ratfun(uint32_t p) {
    if (p > 4096) throw LimitExceeded("gp_ratfun: dense expansion capped at p <= 4096");
    Field f = Field::make(p, 1); // also validates primality
    // numerator of (1-U^p) - (1-U)^p over the integers; every coefficient is
    // divisible by p, and the division happens before reduction mod p
    std::vector<Fq> num_coeffs(p + 1, f.zero());
    for (uint32_t j = 1; j <= p; ++j) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), p, j);
        if (j % 2 == 0) c = -c; // (-1)^{j+1} binom(p,j)
        if (j == p) c -= 1;     // the -U^p term of (1-U^p)
        if (!mpz_divisible_ui_p(c.get_mpz_t(), p))
            throw std::logic_error("gp_ratfun: numerator coefficient not divisible by p");
        c /= p;
        num_coeffs[j] = f.from_code(mpz_fdiv_ui(c.get_mpz_t(), p));
    }
    Poly num(f, std::move(num_coeffs));
    Poly one_minus_u = Poly::from_codes(f, {1}) - Poly::variable(f);
    Poly den = pow_poly(one_minus_u, p);
    return RatFun(std::move(num), std::move(den));
}

namespace {

Poly embed_prime_poly(const Poly& src, const Field& target) {
    std::vector<Fq> v;
    v.reserve(src.coeffs().size());
    for (Fq c : src.coeffs()) v.push_back(target.from_code(c.code));
    return Poly(target, std::move(v));
}

} // namespace

RatFun gp_at_inverse_power(uint32_t p, const Poly& P, uint32_t k) {
    const Field& f = P.field();
    if (f.p() != p) throw std::invalid_argument("gp_at_inverse_power: characteristic mismatch");
    if (P.degree() < 1) throw std::invalid_argument("gp_at_inverse_power: P must be nonconstant");
    if (k < 1) throw std::invalid_argument("gp_at_inverse_power: k must be positive");
    RatFun g = gp_ratfun(p);
    // with Q = P^k:  G(1/Q) = Q^{deg den - deg num} * rev(num)(Q) / rev(den)(Q)
    Poly Q = pow_poly(P, k);
    int64_t da = g.num().degree(), db = g.den().degree();
    Poly num_t = compose(embed_prime_poly(g.num().reversed(), f), Q);
    Poly den_t = compose(embed_prime_poly(g.den().reversed(), f), Q);
    num_t = num_t * pow_poly(Q, uint32_t(db - da));
    return RatFun(std::move(num_t), std::move(den_t));
}

bool scaling_identity_check(const Field& f, uint32_t k) {
    if (k < 1) throw std::invalid_argument("scaling_identity_check: k must be positive");
    uint32_t p = f.p();
    uint64_t g = std::gcd<uint64_t>(f.q() - 1, k);
    uint64_t l = (uint64_t(f.q() - 1) / g) * k;
    Poly X = Poly::variable(f);

    RatFun lhs(f);
    for (uint32_t c = 1; c < f.q(); ++c)
        lhs = lhs + gp_at_inverse_power(p, X.scaled(f.from_code(c)), k);
    RatFun rhs = gp_at_inverse_power(p, X, uint32_t(l)).scaled(f.from_int(int64_t(g)));
    if (lhs != rhs) return false;

    if (p == 2) {
        RatFun lhs2(f);
        Poly one = Poly::constant(f, f.one());
        for (uint32_t c = 1; c < f.q(); ++c) {
            Poly den = pow_poly(X.scaled(f.from_code(c)), k) - one;
            lhs2 = lhs2 + RatFun(one, den);
        }
        RatFun rhs2(Poly::constant(f, f.one()), pow_poly(X, uint32_t(l)) - one);
        if (lhs2 != rhs2) return false;
    }
    return true;
}

std::vector<Fq> taylor_coeffs(const RatFun& r, size_t n) {
    const Field& f = r.field();
    if (r.den().coeff(0) == f.zero())
        throw std::domain_error("taylor_coeffs: pole at T = 0");
    std::vector<Fq> rec(n, f.zero());
    if (n == 0) return rec;
    Fq c0_inv = f.inv(r.den().coeff(0));
    rec[0] = c0_inv;
    for (size_t i = 1; i < n; ++i) {
        Fq acc = f.zero();
        for (size_t j = 1; j <= i && int64_t(j) <= r.den().degree(); ++j)
            acc = f.add(acc, f.mul(r.den().coeff(int64_t(j)), rec[i - j]));
        rec[i] = f.neg(f.mul(c0_inv, acc));
    }
    std::vector<Fq> out(n, f.zero());
    for (size_t i = 0; i <= size_t(std::max<int64_t>(r.num().degree(), 0)) && i < n; ++i) {
        Fq a = r.num().coeff(int64_t(i));
        if (a == f.zero()) continue;
        for (size_t j = 0; i + j < n; ++j)
            out[i + j] = f.add(out[i + j], f.mul(a, rec[j]));
    }
    return out;
}

RatFun pade_reconstruct(const USeries& s, int64_t num_deg, int64_t den_deg) {
    const Field& f = s.field();
    if (num_deg < 0 || den_deg < 0)
        throw std::invalid_argument("pade_reconstruct: negative degree bound");
    if (s.is_zero_within_precision()) return RatFun(f);

    int64_t v = s.valuation();
    int64_t M = s.precision() - v;
    if (M < num_deg + den_deg + 2)
        throw ReconstructionFailed("pade_reconstruct: series precision below num_deg + den_deg + 2");

    // extended Euclid on (u^M, t) where t is the shifted series window;
    // stop at the first remainder of degree <= num_deg
    Poly t(f, s.coeffs());
    Poly r_prev = Poly::variable(f).shifted(uint32_t(M - 1)); // u^M as a poly of degree M
    Poly r_cur = t;
    Poly q_prev(f), q_cur = Poly::constant(f, f.one());
    while (r_cur.degree() > num_deg) {
        auto [quo, rem] = divrem(r_prev, r_cur);
        Poly q_next = q_prev - quo * q_cur;
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
    }
    if (r_cur.is_zero() || q_cur.is_zero())
        throw ReconstructionFailed("pade_reconstruct: degenerate approximant");

    // back to T: u^v P(u)/Q(u) = T^{deg Q - deg P - v} revP(T)/revQ(T)
    int64_t shift = q_cur.degree() - r_cur.degree() - v;
    Poly num_t = r_cur.reversed();
    Poly den_t = q_cur.reversed();
    if (shift >= 0)
        num_t = num_t.shifted(uint32_t(shift));
    else
        den_t = den_t.shifted(uint32_t(-shift));
    RatFun out(std::move(num_t), std::move(den_t));

    if (out.num().degree() > num_deg || out.den().degree() > den_deg)
        throw ReconstructionFailed("pade_reconstruct: no approximant within the degree bounds");
    if (!agrees(expand(out, s.precision()), s))
        throw ReconstructionFailed("pade_reconstruct: approximant disagrees with the series window");
    return out;
}

} // namespace fqps
