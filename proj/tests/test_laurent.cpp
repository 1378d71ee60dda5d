#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqpsums/laurent.hpp"
#include "fqpsums/ratfun.hpp"

using namespace fqps;

namespace {

Poly rand_poly(const Field& f, std::mt19937& rng, uint32_t max_deg) {
    std::uniform_int_distribution<uint32_t> dist(0, f.q() - 1);
    std::vector<Fq> c(1 + rng() % (max_deg + 1));
    for (auto& x : c) x = f.from_code(dist(rng));
    return Poly(f, std::move(c));
}

} // namespace

TEST_CASE("construction, trimming and the zero window") {
    Field f2 = Field::make(2, 1);
    USeries s(f2, 0, 4, {f2.zero(), f2.one(), f2.zero(), f2.one()});
    CHECK(s.valuation() == 1); // leading zero trimmed
    CHECK(s.precision() == 4);
    CHECK(s.coeff(0) == f2.zero());
    CHECK(s.coeff(3) == f2.one());
    CHECK_THROWS_AS(s.coeff(4), std::invalid_argument);
    CHECK_THROWS_AS(USeries(f2, 3, 3, {}), std::invalid_argument);

    USeries z = USeries::zero(f2, 5);
    CHECK(z.is_zero_within_precision());
    CHECK(z.precision() == 5);
}

TEST_CASE("addition takes the minimum precision") {
    Field f2 = Field::make(2, 1);
    // (u + u^2 known to N=3) + (u known to N=5) = u^2 with N=3 in char 2
    USeries a(f2, 1, 3, {f2.one(), f2.one()});
    USeries b(f2, 1, 5, {f2.one(), f2.zero(), f2.zero(), f2.zero()});
    USeries sum = a + b;
    CHECK(sum.precision() == 3);
    CHECK(sum.valuation() == 2);
    CHECK(sum.coeff(2) == f2.one());
    CHECK(sum == USeries::monomial(f2, 2, f2.one(), 3));
}

TEST_CASE("geometric series by inversion") {
    Field f2 = Field::make(2, 1);
    // 1 - u = 1 + u over F_2
    USeries one_minus_u(f2, 0, 5, {f2.one(), f2.one(), f2.zero(), f2.zero(), f2.zero()});
    USeries inv = one_minus_u.inverse();
    CHECK(inv.precision() == 5);
    for (int64_t e = 0; e < 5; ++e) CHECK(inv.coeff(e) == f2.one());
    CHECK_THROWS_AS(USeries::zero(f2, 4).inverse(), std::domain_error);
}

TEST_CASE("multiplication precision: min(N1+v2, N2+v1)") {
    Field f2 = Field::make(2, 1);
    USeries a = USeries::monomial(f2, 2, f2.one(), 6);
    USeries b = USeries::monomial(f2, 3, f2.one(), 6);
    USeries prod = a * b;
    CHECK(prod.valuation() == 5);
    CHECK(prod.precision() == 8);

    // perturbation oracle: tails at or beyond each operand's precision must
    // not change any coefficient below 8, and can change the one at 8;
    // exact models: a' = u^2 + u^6, b' = u^3 + u^6 as exact series to N=20
    auto exact_mono = [&](std::initializer_list<int64_t> exps) {
        USeries s = USeries::zero(f2, 20);
        for (int64_t e : exps) s = s + USeries::monomial(f2, e, f2.one(), 20);
        return s;
    };
    USeries base = exact_mono({2}) * exact_mono({3});
    USeries tail_a = exact_mono({2, 6}) * exact_mono({3});
    USeries tail_b = exact_mono({2}) * exact_mono({3, 6});
    for (int64_t e = 5; e < 8; ++e) {
        CHECK(tail_a.coeff(e) == base.coeff(e));
        CHECK(tail_b.coeff(e) == base.coeff(e));
    }
    CHECK(tail_b.coeff(8) != base.coeff(8)); // u^2 * u^6 lands exactly at u^8
}

TEST_CASE("expansion of rational functions") {
    Field f2 = Field::make(2, 1);
    Poly t = Poly::variable(f2);
    Poly one = Poly::constant(f2, f2.one());

    // 1/(T-1) = u + u^2 + u^3 + ...
    USeries s = expand(RatFun(one, t - one), 4);
    CHECK(s.valuation() == 1);
    for (int64_t e = 1; e < 4; ++e) CHECK(s.coeff(e) == f2.one());

    // a monomial embeds with negative exponent
    USeries sq = expand(RatFun::from_poly(t * t), 5);
    CHECK(sq.valuation() == -2);
    CHECK(sq.coeff(-2) == f2.one());
    for (int64_t e = -1; e < 5; ++e) CHECK(sq.coeff(e) == f2.zero());

    // 1/(T^4+T^2): long-division oracle u^4/(1+u^2) = u^4 + u^6 + u^8 + ...
    Poly den = Poly::from_codes(f2, {0, 0, 1, 0, 1});
    USeries g = expand(RatFun(one, den), 9);
    for (int64_t e = g.valuation(); e < 9; ++e)
        CHECK(g.coeff(e) == ((e >= 4 && e % 2 == 0) ? f2.one() : f2.zero()));

    CHECK(expand(RatFun(f2), 6).is_zero_within_precision());
}

TEST_CASE("inverse-power geometric expansions from the first display") {
    Field f2 = Field::make(2, 1);
    Poly t = Poly::variable(f2);

    USeries a = geometric_inverse_power(t, 1, 4); // 1/(T-1)
    for (int64_t e = 1; e < 4; ++e) CHECK(a.coeff(e) == f2.one());

    USeries b = geometric_inverse_power(Poly::from_codes(f2, {1, 1}), 1, 2); // 1/((T+1)-1)
    CHECK(b.valuation() == 1);
    CHECK(b.coeff(1) == f2.one());

    USeries c = geometric_inverse_power(Poly::from_codes(f2, {1, 1, 1}), 1, 4);
    CHECK(c.valuation() == 2);
    CHECK(c.coeff(2) == f2.one());
    CHECK(c.coeff(3) == f2.one());
}

TEST_CASE("expansion is multiplicative") {
    std::mt19937 rng(42);
    for (uint32_t q : {2u, 3u, 4u}) {
        Field f = Field::from_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            Poly n1 = rand_poly(f, rng, 4), n2 = rand_poly(f, rng, 4);
            Poly d1 = rand_poly(f, rng, 4), d2 = rand_poly(f, rng, 4);
            if (d1.is_zero() || d2.is_zero()) continue;
            RatFun r1(n1, d1), r2(n2, d2);
            USeries lhs = expand(r1 * r2, 12);
            USeries rhs = expand(r1, 12) * expand(r2, 12);
            CHECK(agrees(lhs, rhs));
        }
    }
}

TEST_CASE("geometric expansion matches the substituted rational form, p = 2") {
    Field f2 = Field::make(2, 1);
    for (uint32_t d = 1; d <= 4; ++d)
        for (const Poly& P : monic_irreducibles_vec(f2, d))
            for (uint32_t k = 1; k <= 3; ++k) {
                USeries direct = geometric_inverse_power(P, k, 14);
                USeries via_gp = expand(gp_at_inverse_power(2, P, k), 14);
                CHECK(direct == via_gp);
            }
}

TEST_CASE("valuation contract: val G_p(1/P^k) = k deg P") {
    for (uint32_t q : {2u, 3u}) {
        Field f = Field::from_order(q);
        for (uint32_t d = 1; d <= 3; ++d)
            for (const Poly& P : monic_irreducibles_vec(f, d))
                for (uint32_t k = 1; k <= 4; ++k) {
                    USeries s = expand(gp_at_inverse_power(f.p(), P, k), int64_t(k) * d + 5);
                    CHECK(s.valuation() == int64_t(k) * d);
                    CHECK(s.coeff(s.valuation()) != f.zero());
                }
    }
}

TEST_CASE("exact multiplication keeps the shifted precision") {
    Field f2 = Field::make(2, 1);
    Poly t = Poly::variable(f2);
    USeries s = expand(RatFun(Poly::constant(f2, f2.one()), t * t + t), 10); // val 2
    // multiply by T^2+T (valuation -2): precision drops by exactly 2
    USeries back = mul_exact(s, RatFun::from_poly(t * t + t));
    CHECK(back.precision() == 8);
    CHECK(back.coeff(0) == f2.one());
    for (int64_t e = 1; e < 8; ++e) CHECK(back.coeff(e) == f2.zero());
    // multiply by 1/(T+1) (valuation +1): precision grows by 1
    USeries third = mul_exact(s, RatFun(Poly::constant(f2, f2.one()), t + Poly::constant(f2, f2.one())));
    CHECK(third.precision() == 11);
}

TEST_CASE("strict equality versus window agreement") {
    Field f3 = Field::make(3, 1);
    USeries a = USeries::monomial(f3, 1, f3.one(), 5);
    USeries b = USeries::monomial(f3, 1, f3.one(), 7);
    CHECK(agrees(a, b));
    CHECK(a != b);
    CHECK(a == b.truncated(5));
}
