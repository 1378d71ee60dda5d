#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fqpsums/io.hpp"

using namespace fqps;

TEST_CASE("text rendering of polynomials") {
    Field f2 = Field::make(2, 1);
    CHECK(to_string(Poly::from_codes(f2, {1, 0, 1, 0, 1})) == "T^4+T^2+1");
    CHECK(to_string(Poly(f2)) == "0");
    CHECK(to_string(Poly::variable(f2)) == "T");

    Field f3 = Field::make(3, 1);
    CHECK(to_string(Poly::from_codes(f3, {1, 0, 0, 2})) == "2*T^3+1");

    // extension coefficients render as parenthesized polynomials in g
    Field f4 = Field::make(2, 2);
    CHECK(to_string(Poly::from_codes(f4, {2, 0, 3})) == "(g+1)*T^2+g");
    CHECK(to_string(Poly::from_codes(f4, {0, 2})) == "(g)*T");
}

TEST_CASE("text rendering of rational functions and series") {
    Field f2 = Field::make(2, 1);
    RatFun r(Poly::constant(f2, f2.one()), Poly::from_codes(f2, {0, 0, 1, 0, 1}));
    CHECK(to_string(r) == "(1)/(T^4+T^2)");
    CHECK(to_string(RatFun::one(f2)) == "(1)");
    CHECK(to_string(RatFun(f2)) == "(0)");

    USeries s = expand(r, 9);
    CHECK(to_string(s) == "u^4 + u^6 + u^8 + O(u^9)");
    CHECK(to_string(USeries::zero(f2, 5)) == "O(u^5)");
    CHECK(to_string(expand(RatFun::from_poly(Poly::variable(f2)), 2)) == "u^-1 + O(u^2)");

    Field f3 = Field::make(3, 1);
    USeries t = expand(RatFun::from_poly(Poly::from_codes(f3, {1, 2})), 2);
    CHECK(to_string(t) == "2*u^-1 + 1 + O(u^2)");
}

TEST_CASE("json round trips") {
    Field f9 = Field::make(3, 2);
    Json jf = to_json(f9);
    CHECK(jf.at("p") == 3);
    CHECK(jf.at("e") == 2);
    CHECK(field_from_json(jf).same(f9));

    Poly p = Poly::from_codes(f9, {5, 0, 7, 1});
    CHECK(poly_from_json(to_json(p)) == p);

    RatFun r(Poly::from_codes(f9, {1, 2}), Poly::from_codes(f9, {0, 4, 1}));
    CHECK(ratfun_from_json(to_json(r)) == r);

    USeries s = expand(r, 7);
    CHECK(useries_from_json(to_json(s)) == s);
    USeries neg = expand(RatFun::from_poly(Poly::from_codes(f9, {0, 0, 2})), 4);
    CHECK(useries_from_json(to_json(neg)) == neg);

    ELinComb a = power_sum_in_e(5);
    CHECK(elincomb_from_json(to_json(a)) == a);

    PibarRat v{r, 12};
    CHECK(pibar_from_json(to_json(v)) == v);
}

TEST_CASE("json encodings follow the documented schemas") {
    Field f4 = Field::make(2, 2);
    Json jp = to_json(Poly::from_codes(f4, {2, 3}));
    CHECK(jp.at("coeffs") == Json::parse("[[0,1],[1,1]]"));
    CHECK(jp.at("field").at("modulus") == Json::parse("[1,1,1]"));

    Json js = to_json(USeries::monomial(f4, -2, f4.one(), 1));
    CHECK(js.at("v") == -2);
    CHECK(js.at("N") == 1);
    REQUIRE(js.at("coeffs").size() == 3);

    ELinComb g = gp_expansion(2, 3, std::set<uint32_t>{1, 3});
    Json jg = to_json(g);
    REQUIRE(jg.is_array());
    CHECK(jg[0].at("parts") == Json::parse("[3,3]"));
    CHECK(jg[0].at("coeff") == "3");
}

TEST_CASE("json decoding validates invariants") {
    Field f2 = Field::make(2, 1);
    Json good = to_json(Poly::from_codes(f2, {1, 1}));

    Json bad_modulus = good;
    bad_modulus["field"]["modulus"] = Json::parse("[1,0,1]");
    CHECK_THROWS_AS(poly_from_json(bad_modulus), std::invalid_argument);

    Json trailing = good;
    trailing["coeffs"] = Json::parse("[[1],[1],[0]]");
    CHECK_THROWS_AS(poly_from_json(trailing), std::invalid_argument);

    Json bad_coord = good;
    bad_coord["coeffs"] = Json::parse("[[2],[1]]");
    CHECK_THROWS_AS(poly_from_json(bad_coord), std::invalid_argument);

    RatFun r(Poly::constant(f2, f2.one()), Poly::from_codes(f2, {0, 1}));
    Json not_reduced = to_json(r);
    not_reduced["num"]["coeffs"] = Json::parse("[[0],[1]]"); // T/T
    CHECK_THROWS_AS(ratfun_from_json(not_reduced), std::invalid_argument);
}

TEST_CASE("verify report json") {
    Field f2 = Field::make(2, 1);
    VerifyReport rep = verify(f2, 3, 4);
    Json j = to_json(rep);
    CHECK(j.at("q") == 2);
    CHECK(j.at("k") == 3);
    CHECK(j.at("dmax") == 4);
    CHECK(j.at("precision") == 15);
    CHECK(j.at("match") == true);
    CHECK(j.at("first_mismatch").is_null());
    CHECK(j.contains("exact"));
    CHECK(j.contains("numeric"));
    CHECK_FALSE(j.contains("millis"));
    CHECK(to_json(rep, true).contains("millis"));
    CHECK(ratfun_from_json(j.at("exact")) == rep.exact);
}
