#include "fqpsums/primesum.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

#include "fqpsums/errors.hpp"

namespace fqps {

namespace {

// one summand G_p(1/P^k), expanded to precision N
USeries summand_series(const Poly& P, uint32_t k, int64_t N) {
    RatFun g = gp_at_inverse_power(P.field().p(), P, k);
    return expand(g, N);
}

struct Block {
    uint32_t degree;
    uint64_t begin, end;
};

} // namespace

USeries numeric_prime_sum(const SumRequest& req, unsigned threads) {
    const Field& f = req.field;
    if (req.k < 1 || req.dmax < 1)
        throw std::invalid_argument("numeric_prime_sum: k and dmax must be positive");
    if (threads == 0) threads = 1;
    int64_t N = req.precision();

    std::vector<Block> blocks;
    for (uint32_t d = 1; d <= req.dmax; ++d) {
        uint64_t count = monic_count(f, d);
        uint64_t per = (count + threads - 1) / threads;
        for (uint64_t b = 0; b < count; b += per)
            blocks.push_back(Block{d, b, std::min(b + per, count)});
    }

    std::vector<USeries> partial(blocks.size(), USeries::zero(f, N));
    auto work = [&](unsigned worker) {
        for (size_t i = worker; i < blocks.size(); i += threads) {
            const Block& blk = blocks[i];
            USeries acc = USeries::zero(f, N);
            for (uint64_t idx = blk.begin; idx < blk.end; ++idx) {
                Poly P = monic_poly_at(f, blk.degree, idx);
                if (!is_irreducible(P)) continue;
                if (req.monic_only) {
                    acc = acc + summand_series(P, req.k, N);
                } else {
                    for (uint32_t c = 1; c < f.q(); ++c)
                        acc = acc + summand_series(P.scaled(f.from_code(c)), req.k, N);
                }
            }
            partial[i] = std::move(acc);
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    USeries total = USeries::zero(f, N);
    for (const USeries& s : partial) total = total + s;
    return total;
}

USeries numeric_zeta(const Field& f, uint32_t k, uint32_t dmax) {
    if (k < 1) throw std::invalid_argument("numeric_zeta: k must be positive");
    int64_t N = int64_t(k) * (int64_t(dmax) + 1);
    USeries acc = USeries::zero(f, N);
    Poly one = Poly::constant(f, f.one());
    for (uint32_t d = 0; d <= dmax; ++d) {
        MonicStream stream(f, d);
        while (auto a = stream.next())
            acc = acc + expand_quotient(one, pow_poly(*a, k), N);
    }
    return acc;
}

USeries numeric_e_spec(const Field& f, uint32_t m, uint32_t dmax, bool monic_only) {
    if (m < 1) throw std::invalid_argument("numeric_e_spec: m must be positive");
    int64_t N = monic_only ? int64_t(f.q() - 1) * (int64_t(dmax) + 1) : int64_t(dmax) + 1;

    // coefficients of Z^0..Z^m of the product, each a series truncated at N
    std::vector<USeries> z(m + 1, USeries::zero(f, N));
    z[0] = USeries::monomial(f, 0, f.one(), N);
    Poly one = Poly::constant(f, f.one());

    auto absorb = [&](const USeries& x) {
        // multiply the truncated product by (1 + sign * x Z)
        for (uint32_t j = m; j >= 1; --j) {
            USeries t = x * z[j - 1];
            z[j] = (z[j] + t).truncated(N);
        }
    };

    if (monic_only) {
        for (uint32_t d = 0; d <= dmax; ++d) {
            MonicStream stream(f, d);
            while (auto a = stream.next()) {
                USeries x = expand_quotient(one, pow_poly(*a, f.q() - 1), N);
                absorb(-x); // factors are (1 - Z/A^{q-1})
            }
        }
        USeries em = z[m];
        if (m % 2 == 1) em = -em; // e_m = (-1)^m [Z^m]
        return em;
    }

    for (uint32_t d = 0; d <= dmax; ++d) {
        MonicStream stream(f, d);
        while (auto a = stream.next()) {
            for (uint32_t c = 1; c < f.q(); ++c) {
                USeries x = expand_quotient(one, a->scaled(f.from_code(c)), N);
                absorb(x); // factors are (1 + Z/A)
            }
        }
    }
    return z[m];
}

uint64_t psi_count(uint32_t p, uint32_t r) {
    if (p < 2) throw std::invalid_argument("psi_count: p must be at least 2");
    if (r > 64 || p > 16) throw LimitExceeded("psi_count: brute-force enumeration bound exceeded");
    // enumerate (r_1, ..., r_p) with sum r, count those with min = 0
    uint64_t count = 0;
    std::vector<uint32_t> tuple(p, 0);
    auto rec = [&](auto&& self, uint32_t pos, uint32_t remaining) -> void {
        if (pos + 1 == p) {
            tuple[pos] = remaining;
            for (uint32_t x : tuple)
                if (x == 0) { ++count; return; }
            return;
        }
        for (uint32_t v = 0; v <= remaining; ++v) {
            tuple[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, r);
    return count;
}

VerifyReport verify(const Field& f, uint32_t k, uint32_t dmax, unsigned threads) {
    auto start = std::chrono::steady_clock::now();
    VerifyReport rep{f.q(), k, dmax, 0, false, std::nullopt,
                     RatFun(f), USeries::zero(f, 1), 0};
    rep.exact = exact_prime_sum(f, k);
    SumRequest req{f, k, dmax, true};
    rep.precision = req.precision();
    rep.numeric = numeric_prime_sum(req, threads);
    USeries exact_series = expand(rep.exact, rep.precision);

    rep.match = true;
    int64_t lo = std::min(exact_series.valuation(), rep.numeric.valuation());
    for (int64_t e = lo; e < rep.precision; ++e) {
        if (exact_series.coeff(e) != rep.numeric.coeff(e)) {
            rep.match = false;
            rep.first_mismatch = e;
            break;
        }
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return rep;
}

} // namespace fqps
