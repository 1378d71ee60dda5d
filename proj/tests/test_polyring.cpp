#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqpsums/io.hpp"
#include "fqpsums/poly.hpp"

using namespace fqps;

namespace {

// trial-division irreducibility oracle: divide by every monic polynomial of
// degree 1..deg/2
bool irreducible_by_trial_division(const Poly& f) {
    for (uint32_t d = 1; 2 * d <= uint32_t(f.degree()); ++d) {
        MonicStream s(f.field(), d);
        while (auto div = s.next())
            if (divrem(f, *div).second.is_zero()) return false;
    }
    return f.degree() >= 1;
}

// necklace count of monic irreducibles of degree d via Moebius inversion
int64_t moebius(uint32_t n) {
    int64_t m = 1;
    for (uint32_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

uint64_t necklace_count(uint32_t q, uint32_t d) {
    int64_t total = 0;
    for (uint32_t e = 1; e <= d; ++e) {
        if (d % e) continue;
        uint64_t qe = 1;
        for (uint32_t i = 0; i < e; ++i) qe *= q;
        total += moebius(d / e) * int64_t(qe);
    }
    return uint64_t(total) / d;
}

Poly make2(const std::vector<uint64_t>& codes) {
    return Poly::from_codes(Field::make(2, 1), codes);
}

} // namespace

TEST_CASE("arithmetic basics") {
    Field f2 = Field::make(2, 1);
    Poly t_plus_1 = make2({1, 1});
    CHECK(t_plus_1 * t_plus_1 == make2({1, 0, 1})); // Frobenius in char 2
    CHECK(gcd_poly(make2({0, 1, 1}), make2({0, 1})) == make2({0, 1}));
    // repeated squaring by hand: T^2 = T+1, T^4 = (T+1)^2 = T^2+1 = T
    CHECK(powmod(Poly::variable(f2), 4, make2({1, 1, 1})) == Poly::variable(f2));
}

TEST_CASE("divrem is exact division with remainder") {
    std::mt19937 rng(7);
    for (uint32_t q : {2u, 3u, 9u}) {
        Field f = Field::from_order(q);
        std::uniform_int_distribution<uint32_t> dist(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Fq> ac(1 + rng() % 8), bc(1 + rng() % 5);
            for (auto& c : ac) c = f.from_code(dist(rng));
            for (auto& c : bc) c = f.from_code(dist(rng));
            Poly a(f, ac), b(f, bc);
            if (b.is_zero()) {
                CHECK_THROWS_AS(divrem(a, b), std::domain_error);
                continue;
            }
            auto [quo, rem] = divrem(a, b);
            CHECK(quo * b + rem == a);
            CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("irreducibility of the first summands") {
    Field f2 = Field::make(2, 1);
    CHECK(is_irreducible(make2({1, 1, 1})));
    CHECK_FALSE(is_irreducible(make2({1, 0, 1}))); // (T+1)^2
    CHECK(is_irreducible(make2({1, 1, 0, 1})));    // T^3+T+1
    CHECK(is_irreducible(make2({1, 0, 1, 1})));    // T^3+T^2+1
    CHECK_THROWS_AS(is_irreducible(Poly::constant(f2, f2.one())), std::invalid_argument);
    CHECK_THROWS_AS(is_irreducible(Poly(f2)), std::invalid_argument);
}

TEST_CASE("rabin test agrees with trial division through degree 6 over F_2") {
    Field f2 = Field::make(2, 1);
    for (uint32_t d = 1; d <= 6; ++d) {
        MonicStream s(f2, d);
        while (auto p = s.next())
            CHECK(is_irreducible(*p) == irreducible_by_trial_division(*p));
    }
}

TEST_CASE("monic enumeration order and counts") {
    Field f2 = Field::make(2, 1);
    auto d0 = monic_polys_vec(f2, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == Poly::constant(f2, f2.one()));

    auto d1 = monic_polys_vec(f2, 1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == Poly::variable(f2)); // T before T+1
    CHECK(d1[1] == make2({1, 1}));

    CHECK(monic_polys_vec(Field::make(3, 1), 2).size() == 9);
}

TEST_CASE("monic irreducibles match the displayed sets") {
    Field f2 = Field::make(2, 1);
    auto deg1 = monic_irreducibles_vec(f2, 1);
    auto deg2 = monic_irreducibles_vec(f2, 2);
    auto deg3 = monic_irreducibles_vec(f2, 3);
    REQUIRE(deg1.size() == 2);
    REQUIRE(deg2.size() == 1);
    REQUIRE(deg3.size() == 2);
    CHECK(deg2[0] == make2({1, 1, 1}));
    CHECK(deg3[0] == make2({1, 1, 0, 1}));
    CHECK(deg3[1] == make2({1, 0, 1, 1}));

    // degree 4: necklace count (2^4 - 2^2)/4 = 3, plus trial-division filter
    auto deg4 = monic_irreducibles_vec(f2, 4);
    CHECK(deg4.size() == necklace_count(2, 4));
    CHECK(deg4.size() == 3);
    for (const Poly& p : deg4) CHECK(irreducible_by_trial_division(p));

    Field f3 = Field::make(3, 1);
    auto lin = monic_irreducibles_vec(f3, 1);
    REQUIRE(lin.size() == 3);
    CHECK(lin[0] == Poly::variable(f3));
    CHECK(lin[1] == Poly::from_codes(f3, {1, 1}));
    CHECK(lin[2] == Poly::from_codes(f3, {2, 1}));
}

TEST_CASE("every enumerated irreducible passes the membership test") {
    for (uint32_t q : {2u, 4u, 9u}) {
        Field f = Field::from_order(q);
        for (uint32_t d = 1; d <= 3; ++d)
            for (const Poly& p : monic_irreducibles_vec(f, d)) {
                CHECK(p.is_monic());
                CHECK(is_irreducible(p));
                CHECK(necklace_count(q, d) == monic_irreducibles_vec(f, d).size());
            }
    }
}

TEST_CASE("degree counts satisfy sum_{e|d} e N_e = q^d") {
    for (uint32_t q : {2u, 3u, 4u, 5u}) {
        CAPTURE(q);
        CHECK(irreducible_count_check(Field::from_order(q), 8));
    }
}

TEST_CASE("enumeration is deterministic across runs") {
    Field f = Field::make(3, 2);
    std::string run1, run2;
    for (int pass = 0; pass < 2; ++pass) {
        std::string& out = pass ? run2 : run1;
        MonicIrreducibleStream s(f, 2);
        while (auto p = s.next()) out += to_string(*p) + "\n";
    }
    CHECK(run1 == run2);
    CHECK(!run1.empty());
}

TEST_CASE("composition and powers") {
    Field f3 = Field::make(3, 1);
    Poly t = Poly::variable(f3);
    Poly inner = Poly::from_codes(f3, {1, 2}); // 2T+1
    // (X^2+1) o (2T+1) = (2T+1)^2 + 1 = 4T^2+4T+2 = T^2+T+2
    Poly outer = Poly::from_codes(f3, {1, 0, 1});
    CHECK(compose(outer, inner) == Poly::from_codes(f3, {2, 1, 1}));
    CHECK(pow_poly(inner, 2) == inner * inner);
    CHECK(pow_poly(inner, 0) == Poly::constant(f3, f3.one()));
}
