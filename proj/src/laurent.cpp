#include "fqpsums/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqps {

namespace {

void check_same_field(const USeries& a, const USeries& b) {
    if (!a.field().same(b.field()))
        throw std::invalid_argument("USeries: operands live in different fields");
}

// reciprocal of a unit power series given by `unit` (unit[0] != 0), to n terms
std::vector<Fq> unit_reciprocal(const Field& f, const std::vector<Fq>& unit, size_t n) {
    std::vector<Fq> r(n, f.zero());
    if (n == 0) return r;
    Fq c0_inv = f.inv(unit[0]);
    r[0] = c0_inv;
    for (size_t i = 1; i < n; ++i) {
        Fq acc = f.zero();
        size_t jmax = std::min(i, unit.size() - 1);
        for (size_t j = 1; j <= jmax; ++j)
            acc = f.add(acc, f.mul(unit[j], r[i - j]));
        r[i] = f.neg(f.mul(c0_inv, acc));
    }
    return r;
}

} // namespace

USeries::USeries(Field f, int64_t v, int64_t N, std::vector<Fq> coeffs)
    : field_(std::move(f)), v_(v), N_(N), coeffs_(std::move(coeffs)) {
    if (N_ <= v_) throw std::invalid_argument("USeries: precision must exceed the lowest exponent");
    if (int64_t(coeffs_.size()) != N_ - v_)
        throw std::invalid_argument("USeries: coefficient count must equal N - v");
    normalize();
}

void USeries::normalize() {
    size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead] == field_.zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + long(lead));
        v_ += int64_t(lead);
    }
}

USeries USeries::zero(const Field& f, int64_t N) {
    return USeries(f, N - 1, N, {f.zero()});
}

USeries USeries::monomial(const Field& f, int64_t exponent, Fq c, int64_t N) {
    if (exponent >= N) throw std::invalid_argument("USeries::monomial: exponent beyond precision");
    std::vector<Fq> v(size_t(N - exponent), f.zero());
    v[0] = c;
    return USeries(f, exponent, N, std::move(v));
}

Fq USeries::coeff(int64_t exponent) const {
    if (exponent >= N_)
        throw std::invalid_argument("USeries::coeff: exponent at or beyond the precision");
    if (exponent < v_) return field_.zero();
    return coeffs_[size_t(exponent - v_)];
}

bool USeries::is_zero_within_precision() const {
    for (const Fq& c : coeffs_)
        if (c != field_.zero()) return false;
    return true;
}

USeries USeries::operator-() const {
    std::vector<Fq> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = field_.neg(coeffs_[i]);
    return USeries(field_, v_, N_, std::move(v));
}

USeries USeries::truncated(int64_t N) const {
    if (N > N_) throw std::invalid_argument("USeries::truncated: cannot raise precision");
    if (N <= v_) return zero(field_, N);
    std::vector<Fq> v(coeffs_.begin(), coeffs_.begin() + long(N - v_));
    return USeries(field_, v_, N, std::move(v));
}

USeries operator+(const USeries& a, const USeries& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    int64_t N = std::min(a.N_, b.N_);
    int64_t v = std::min(a.v_, b.v_);
    std::vector<Fq> c(size_t(N - v), f.zero());
    for (int64_t e = v; e < N; ++e) {
        Fq x = e < a.N_ ? a.coeff(e) : f.zero();
        Fq y = e < b.N_ ? b.coeff(e) : f.zero();
        c[size_t(e - v)] = f.add(x, y);
    }
    return USeries(f, v, N, std::move(c));
}

USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

USeries operator*(const USeries& a, const USeries& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    int64_t N = std::min(a.N_ + b.v_, b.N_ + a.v_);
    int64_t v = a.v_ + b.v_;
    std::vector<Fq> c(size_t(N - v), f.zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == f.zero()) continue;
        int64_t base = a.v_ + int64_t(i) + b.v_;
        if (base >= N) break;
        size_t jmax = std::min(b.coeffs_.size(), size_t(N - base));
        for (size_t j = 0; j < jmax; ++j)
            c[size_t(base - v) + j] = f.add(c[size_t(base - v) + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return USeries(f, v, N, std::move(c));
}

USeries USeries::inverse() const {
    if (is_zero_within_precision())
        throw std::domain_error("USeries::inverse: series is zero within its precision");
    // after normalize() the first stored coefficient is the leading one
    int64_t v = v_;
    int64_t N = N_ - 2 * v;
    std::vector<Fq> rec = unit_reciprocal(field_, coeffs_, size_t(N_ - v_));
    return USeries(field_, -v, N, std::move(rec));
}

USeries USeries::pow(uint32_t n) const {
    if (n == 0) {
        int64_t N = std::max<int64_t>(N_ - v_, 1);
        return USeries::monomial(field_, 0, field_.one(), N);
    }
    USeries r = *this;
    USeries base = *this;
    n -= 1;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

bool agrees(const USeries& a, const USeries& b) {
    if (!a.field().same(b.field())) return false;
    int64_t N = std::min(a.N_, b.N_);
    int64_t lo = std::min(a.v_, b.v_);
    for (int64_t e = lo; e < N; ++e) {
        Fq x = e < a.N_ ? a.coeff(e) : a.field().zero();
        Fq y = e < b.N_ ? b.coeff(e) : b.field().zero();
        if (x != y) return false;
    }
    return true;
}

bool operator==(const USeries& a, const USeries& b) {
    return a.N_ == b.N_ && agrees(a, b);
}

USeries expand_quotient(const Poly& num, const Poly& den, int64_t N) {
    if (den.is_zero()) throw std::domain_error("expand_quotient: zero denominator");
    const Field& f = num.field();
    if (num.is_zero()) return USeries::zero(f, N);
    // num/den = u^{deg den - deg num} * rev(num)(u) / rev(den)(u), and the
    // reversed denominator is a unit at u = 0
    int64_t v = den.degree() - num.degree();
    if (v >= N) return USeries::zero(f, N);
    size_t terms = size_t(N - v);
    Poly rn = num.reversed();
    Poly rd = den.reversed();
    std::vector<Fq> rec = unit_reciprocal(f, rd.coeffs(), terms);
    std::vector<Fq> out(terms, f.zero());
    const auto& nc = rn.coeffs();
    for (size_t i = 0; i < nc.size() && i < terms; ++i) {
        if (nc[i] == f.zero()) continue;
        for (size_t j = 0; i + j < terms; ++j)
            out[i + j] = f.add(out[i + j], f.mul(nc[i], rec[j]));
    }
    return USeries(f, v, N, std::move(out));
}

USeries expand(const RatFun& r, int64_t N) {
    return expand_quotient(r.num(), r.den(), N);
}

USeries mul_exact(const USeries& s, const RatFun& r) {
    if (r.is_zero()) return USeries::zero(s.field(), s.precision());
    int64_t vr = r.den().degree() - r.num().degree();
    // expand r far enough that the product keeps precision N + vr
    int64_t target = s.precision() + vr - s.valuation();
    USeries rs = expand(r, target);
    return s * rs;
}

USeries geometric_inverse_power(const Poly& P, uint32_t k, int64_t N) {
    if (P.degree() < 1) throw std::invalid_argument("geometric_inverse_power: P must be nonconstant");
    const Field& f = P.field();
    Poly pk = pow_poly(P, k);
    Poly den = pk - Poly::constant(f, f.one());
    return expand_quotient(Poly::constant(f, f.one()), den, N);
}

} // namespace fqps
