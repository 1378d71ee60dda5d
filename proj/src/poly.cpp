#include "fqpsums/poly.hpp"

#include <stdexcept>

#include "fqpsums/errors.hpp"

namespace fqps {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
    if (!a.field().same(b.field()))
        throw std::invalid_argument("Poly: operands live in different fields");
}

} // namespace

Poly::Poly(Field f, std::vector<Fq> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == field_.zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Field& f, Fq c) {
    std::vector<Fq> v;
    if (c != f.zero()) v.push_back(c);
    return Poly(f, std::move(v));
}

Poly Poly::variable(const Field& f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::from_codes(const Field& f, const std::vector<uint64_t>& codes) {
    std::vector<Fq> v;
    v.reserve(codes.size());
    for (uint64_t c : codes) v.push_back(f.from_code(c));
    return Poly(f, std::move(v));
}

bool Poly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == field_.one();
}

Fq Poly::coeff(int64_t i) const {
    if (i < 0 || size_t(i) >= coeffs_.size()) return field_.zero();
    return coeffs_[size_t(i)];
}

Fq Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return coeffs_.back();
}

Fq Poly::eval(Fq x) const {
    Fq r = field_.zero();
    for (size_t i = coeffs_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), coeffs_[i]);
    return r;
}

Poly Poly::operator-() const {
    std::vector<Fq> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = field_.neg(coeffs_[i]);
    return Poly(field_, std::move(v));
}

Poly Poly::scaled(Fq c) const {
    if (c == field_.zero()) return Poly(field_);
    std::vector<Fq> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
    return Poly(field_, std::move(v));
}

Poly Poly::shifted(uint32_t k) const {
    if (is_zero()) return *this;
    std::vector<Fq> v(coeffs_.size() + k, field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return Poly(field_, std::move(v));
}

Poly Poly::reversed() const {
    std::vector<Fq> v(coeffs_.rbegin(), coeffs_.rend());
    return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    std::vector<Fq> v(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
    for (size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(int64_t(i)), b.coeff(int64_t(i)));
    return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    std::vector<Fq> v(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
    for (size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(int64_t(i)), b.coeff(int64_t(i)));
    return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Fq> v(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == f.zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(f, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field().same(b.field()) && a.coeffs_ == b.coeffs_;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    Fq lead_inv = f.inv(b.leading());
    std::vector<Fq> rem = a.coeffs();
    int64_t db = b.degree();
    int64_t dq = a.degree() - db;
    std::vector<Fq> quo(size_t(dq) + 1, f.zero());
    for (int64_t shift = dq; shift >= 0; --shift) {
        Fq top = rem[size_t(shift + db)];
        if (top == f.zero()) continue;
        Fq c = f.mul(top, lead_inv);
        quo[size_t(shift)] = c;
        for (int64_t j = 0; j <= db; ++j)
            rem[size_t(shift + j)] = f.sub(rem[size_t(shift + j)], f.mul(c, b.coeffs()[size_t(j)]));
    }
    rem.resize(size_t(db));
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly gcd_poly(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.scaled(f.inv(x.leading()));
}

Poly pow_poly(const Poly& a, uint32_t n) {
    Poly r = Poly::constant(a.field(), a.field().one());
    Poly base = a;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Poly powmod(const Poly& a, uint64_t n, const Poly& m) {
    if (m.is_zero()) throw std::domain_error("powmod: zero modulus");
    Poly r = Poly::constant(a.field(), a.field().one());
    Poly base = divrem(a, m).second;
    while (n) {
        if (n & 1) r = divrem(r * base, m).second;
        n >>= 1;
        if (n) base = divrem(base * base, m).second;
    }
    return r;
}

Poly compose(const Poly& a, const Poly& inner) {
    check_same_field(a, inner);
    const Field& f = a.field();
    Poly r(f);
    for (size_t i = a.coeffs().size(); i-- > 0;)
        r = r * inner + Poly::constant(f, a.coeffs()[i]);
    return r;
}

bool is_irreducible(const Poly& f_in) {
    if (f_in.degree() < 1)
        throw std::invalid_argument("is_irreducible: constant or zero input");
    const Field& f = f_in.field();
    uint32_t d = uint32_t(f_in.degree());
    if (d == 1) return true;

    Poly F = f_in.is_monic() ? f_in : f_in.scaled(f.inv(f_in.leading()));

    // divisible by T, or has a root among small fields: cheap rejections
    if (F.coeff(0) == f.zero()) return false;
    if (f.q() <= 64) {
        for (uint32_t c = 0; c < f.q(); ++c)
            if (F.eval(f.from_code(c)) == f.zero()) return false;
        if (d == 2 || d == 3) return true; // no roots means irreducible at these degrees
    }

    std::vector<uint32_t> prime_divisors;
    {
        uint32_t m = d;
        for (uint32_t r = 2; r * r <= m; ++r)
            if (m % r == 0) { prime_divisors.push_back(r); while (m % r == 0) m /= r; }
        if (m > 1) prime_divisors.push_back(m);
    }

    const Poly T = Poly::variable(f);
    Poly h = divrem(T, F).second; // T mod F
    for (uint32_t j = 1; j <= d; ++j) {
        h = powmod(h, f.q(), F);
        for (uint32_t r : prime_divisors) {
            if (j == d / r) {
                Poly g = gcd_poly(h - T, F);
                if (g.degree() != 0) return false;
            }
        }
    }
    return h == divrem(T, F).second;
}

uint64_t monic_count(const Field& f, uint32_t d) {
    uint64_t c = 1;
    for (uint32_t i = 0; i < d; ++i) {
        if (c > (uint64_t(1) << 62) / f.q())
            throw LimitExceeded("monic_count: q^d does not fit in 64 bits");
        c *= f.q();
    }
    return c;
}

Poly monic_poly_at(const Field& f, uint32_t d, uint64_t index) {
    std::vector<Fq> v(d + 1, f.zero());
    for (uint32_t i = 0; i < d; ++i) { v[i] = f.from_code(index % f.q()); index /= f.q(); }
    v[d] = f.one();
    return Poly(f, std::move(v));
}

MonicStream::MonicStream(Field f, uint32_t d) : field_(std::move(f)), d_(d) {
    count_ = monic_count(field_, d);
}

std::optional<Poly> MonicStream::next() {
    if (index_ >= count_) return std::nullopt;
    return monic_poly_at(field_, d_, index_++);
}

MonicIrreducibleStream::MonicIrreducibleStream(Field f, uint32_t d) : inner_(std::move(f), d) {
    if (d < 1) throw std::invalid_argument("MonicIrreducibleStream: degree must be >= 1");
}

std::optional<Poly> MonicIrreducibleStream::next() {
    while (auto p = inner_.next())
        if (is_irreducible(*p)) return p;
    return std::nullopt;
}

std::vector<Poly> monic_polys_vec(const Field& f, uint32_t d) {
    std::vector<Poly> out;
    MonicStream s(f, d);
    while (auto p = s.next()) out.push_back(std::move(*p));
    return out;
}

std::vector<Poly> monic_irreducibles_vec(const Field& f, uint32_t d) {
    std::vector<Poly> out;
    MonicIrreducibleStream s(f, d);
    while (auto p = s.next()) out.push_back(std::move(*p));
    return out;
}

bool irreducible_count_check(const Field& f, uint32_t dmax) {
    if (dmax < 1) throw std::invalid_argument("irreducible_count_check: dmax must be >= 1");
    std::vector<uint64_t> counts(dmax + 1, 0);
    for (uint32_t d = 1; d <= dmax; ++d) {
        MonicIrreducibleStream s(f, d);
        while (s.next()) ++counts[d];
    }
    for (uint32_t d = 1; d <= dmax; ++d) {
        uint64_t sum = 0;
        for (uint32_t e = 1; e <= d; ++e)
            if (d % e == 0) sum += uint64_t(e) * counts[e];
        if (sum != monic_count(f, d)) return false;
    }
    return true;
}

} // namespace fqps
