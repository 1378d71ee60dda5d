#include "fqpsums/carlitz.hpp"

#include <numeric>
#include <stdexcept>

#include "fqpsums/errors.hpp"
#include "fqpsums/poly.hpp"

namespace fqps {

namespace {

constexpr uint64_t kMaxDDegree = 100000;
constexpr uint32_t kMaxEll = 1024;

// T^{q^i} as a polynomial; q^i is bounded through the D_j degree cap
Poly t_power(const Field& f, uint64_t exponent) {
    return Poly::variable(f).shifted(uint32_t(exponent - 1));
}

} // namespace

Poly carlitz_D(const Field& f, uint32_t j) {
    Poly d = Poly::constant(f, f.one());
    if (j == 0) return d;
    uint64_t qj = 1;
    for (uint32_t i = 0; i < j; ++i) {
        qj *= f.q();
        if (uint64_t(j) * qj > kMaxDDegree)
            throw LimitExceeded("carlitz_D: deg D_j = j q^j exceeds 10^5");
    }
    uint64_t qi = 1;
    for (uint32_t i = 0; i < j; ++i) {
        d = d * (t_power(f, qj) - t_power(f, qi));
        qi *= f.q();
    }
    return d;
}

std::vector<RatFun> carlitz_exp_coeffs(const Field& f, uint32_t n) {
    if (n < 1) throw std::invalid_argument("carlitz_exp_coeffs: need at least one term");
    std::vector<RatFun> out;
    out.reserve(n);
    for (uint32_t j = 0; j < n; ++j)
        out.push_back(RatFun(Poly::constant(f, f.one()), carlitz_D(f, j)));
    return out;
}

std::set<uint32_t> admissible_parts(const Field& f, uint32_t max_part) {
    std::set<uint32_t> parts;
    uint64_t value = 1, qpow = f.q(); // (q^j - 1)/(q - 1) built incrementally
    while (value <= max_part) {
        parts.insert(uint32_t(value));
        value += qpow;
        qpow *= f.q();
    }
    return parts;
}

PibarRat spec_e_monic(const Field& f, uint32_t m) {
    uint64_t grade = uint64_t(m) * (f.q() - 1);
    if (m == 0) return PibarRat{RatFun::one(f), 0};
    // m must be (q^j - 1)/(q - 1) for some j
    uint64_t value = 1, qpow = f.q();
    uint32_t j = 1;
    while (value < m) {
        value += qpow;
        qpow *= f.q();
        ++j;
    }
    if (value != m) return PibarRat{RatFun(f), grade};
    Fq sign = f.pow(f.neg(f.one()), m);
    RatFun r(Poly::constant(f, sign), carlitz_D(f, j));
    return PibarRat{r, grade};
}

PibarRat spec_elincomb(const Field& f, const ELinComb& a) {
    uint64_t grade = uint64_t(a.degree()) * (f.q() - 1);
    RatFun acc(f);
    std::map<uint32_t, PibarRat> cache;
    for (const auto& [parts, coeff] : a.terms()) {
        Fq c = f.from_code(mpz_fdiv_ui(coeff.get_mpz_t(), f.p()));
        if (c == f.zero()) continue;
        RatFun term = RatFun::constant(f, c);
        bool vanished = false;
        for (uint32_t part : parts) {
            auto it = cache.find(part);
            if (it == cache.end())
                it = cache.emplace(part, spec_e_monic(f, part)).first;
            if (it->second.value.is_zero()) { vanished = true; break; }
            term = term * it->second.value;
        }
        if (!vanished) acc = acc + term;
    }
    return PibarRat{acc, grade};
}

PibarRat exact_denominator_via_power(const Field& f, uint32_t ell) {
    auto allowed = admissible_parts(f, ell);
    PibarRat base = spec_elincomb(f, power_sum_in_e(ell, allowed));
    return PibarRat{base.value.pow(f.p()), base.pibar_degree * f.p()};
}

PibarRat exact_denominator_direct(const Field& f, uint32_t ell) {
    uint32_t pl = f.p() * ell;
    auto allowed = admissible_parts(f, pl);
    return spec_elincomb(f, power_sum_in_e(pl, allowed));
}

RatFun exact_prime_sum(const Field& f, uint32_t k) {
    if (k < 1) throw std::invalid_argument("exact_prime_sum: k must be positive");
    if (k % (f.q() - 1) != 0)
        throw UnsupportedExponent("exact_prime_sum: k must be divisible by q-1");
    uint32_t ell = k / (f.q() - 1);
    if (ell > kMaxEll) throw LimitExceeded("exact_prime_sum: ell = k/(q-1) too large");

    auto allowed = admissible_parts(f, f.p() * ell);
    PibarRat num = spec_elincomb(f, gp_expansion(f.p(), ell, allowed));
    PibarRat den = exact_denominator_via_power(f, ell);
    if (num.pibar_degree != den.pibar_degree)
        throw std::logic_error("exact_prime_sum: period grading mismatch");
    if (den.value.is_zero())
        throw std::logic_error("exact_prime_sum: zero denominator (zeta cannot vanish)");
    return num.value / den.value;
}

std::optional<RatFun> closed_form(const Field& f, uint32_t k) {
    if (k < 1) throw std::invalid_argument("closed_form: k must be positive");
    if (k % (f.q() - 1) != 0)
        throw UnsupportedExponent("closed_form: k must be divisible by q-1");
    uint32_t ell = k / (f.q() - 1);
    uint32_t qp = f.q() / f.p();
    if (ell <= qp) return RatFun(f);
    if (ell <= 2 * qp) {
        Fq scalar = f.from_int(int64_t(ell));
        RatFun r(pow_poly(carlitz_D(f, 1), f.q() + 1).scaled(scalar), carlitz_D(f, 2));
        return r;
    }
    return std::nullopt;
}

RatFun exact_all_prime_sum(const Field& f, uint32_t k) {
    if (k < 1) throw std::invalid_argument("exact_all_prime_sum: k must be positive");
    uint64_t g = std::gcd<uint64_t>(f.q() - 1, k);
    uint64_t l = (uint64_t(f.q() - 1) / g) * k;
    if (l > (uint64_t(1) << 31)) throw LimitExceeded("exact_all_prime_sum: LCM(q-1,k) too large");
    RatFun monic_sum = exact_prime_sum(f, uint32_t(l));
    return monic_sum.scaled(f.from_int(int64_t(g)));
}

uint32_t pibar_dmax_for(const Field& f, int64_t N) {
    // need (q-1)(dmax+1) - q >= N
    int64_t need = N + f.q();
    int64_t dmax = (need + int64_t(f.q()) - 2) / int64_t(f.q() - 1) - 1;
    return uint32_t(std::max<int64_t>(dmax, 1));
}

USeries pibar_qm1_series(const Field& f, int64_t N, uint32_t dmax) {
    int64_t sum_precision = int64_t(f.q() - 1) * (dmax + 1);
    if (sum_precision - int64_t(f.q()) < N)
        throw LimitExceeded("pibar_qm1_series: dmax too small for the requested precision");
    USeries acc = USeries::zero(f, sum_precision);
    for (uint32_t d = 0; d <= dmax; ++d) {
        MonicStream stream(f, d);
        while (auto a = stream.next()) {
            Poly apow = pow_poly(*a, f.q() - 1);
            acc = acc + expand_quotient(Poly::constant(f, f.one()), apow, sum_precision);
        }
    }
    USeries scaled = mul_exact(acc, RatFun::from_poly(-carlitz_D(f, 1)));
    return scaled.truncated(N);
}

} // namespace fqps
