#include "fqpsums/io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fqps {

namespace {

// sparse rendering of a coefficient vector in the named variable
std::string sparse_form(const std::vector<std::string>& coeff_strings,
                        const std::vector<bool>& is_one,
                        const std::vector<bool>& needs_parens,
                        const std::string& var) {
    std::string out;
    for (size_t i = coeff_strings.size(); i-- > 0;) {
        if (coeff_strings[i].empty()) continue; // zero coefficient
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += coeff_strings[i];
            continue;
        }
        if (!is_one[i]) {
            if (needs_parens[i])
                out += "(" + coeff_strings[i] + ")*";
            else
                out += coeff_strings[i] + "*";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string fq_to_string(const Field& f, Fq a) {
    if (f.e() == 1) return std::to_string(a.code);
    auto c = f.coords(a);
    std::vector<std::string> strs(c.size());
    std::vector<bool> ones(c.size()), parens(c.size(), false);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) strs[i] = std::to_string(c[i]);
        ones[i] = c[i] == 1;
    }
    return sparse_form(strs, ones, parens, "g");
}

std::string to_string(const Poly& p) {
    const Field& f = p.field();
    if (p.is_zero()) return "0";
    size_t n = p.coeffs().size();
    std::vector<std::string> strs(n);
    std::vector<bool> ones(n), parens(n);
    for (size_t i = 0; i < n; ++i) {
        Fq c = p.coeffs()[i];
        if (c == f.zero()) continue;
        strs[i] = fq_to_string(f, c);
        ones[i] = c == f.one();
        parens[i] = f.e() > 1;
    }
    return sparse_form(strs, ones, parens, "T");
}

std::string to_string(const RatFun& r) {
    std::string out = "(" + to_string(r.num()) + ")";
    if (r.den().degree() != 0) out += "/(" + to_string(r.den()) + ")";
    return out;
}

std::string to_string(const USeries& s) {
    const Field& f = s.field();
    std::string out;
    for (int64_t e = s.valuation(); e < s.precision(); ++e) {
        Fq c = s.coeff(e);
        if (c == f.zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = fq_to_string(f, c);
        bool one = c == f.one();
        if (e == 0) {
            out += cs;
        } else {
            if (!one) out += (f.e() > 1 ? "(" + cs + ")*" : cs + "*");
            out += e == 1 ? "u" : "u^" + std::to_string(e);
        }
    }
    if (!out.empty()) out += " + ";
    out += "O(u^" + std::to_string(s.precision()) + ")";
    return out;
}

std::string to_string(const ELinComb& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [parts, c] : a.terms()) {
        if (!out.empty()) out += " + ";
        out += c.get_str() + "*e[";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        out += "]";
    }
    return out;
}

Json to_json(const Field& f) {
    return Json{{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

Json fq_to_json(const Field& f, Fq a) { return Json(f.coords(a)); }

Json to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (Fq c : p.coeffs()) coeffs.push_back(fq_to_json(p.field(), c));
    return Json{{"field", to_json(p.field())}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const RatFun& r) {
    return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

Json to_json(const USeries& s) {
    Json coeffs = Json::array();
    for (Fq c : s.coeffs()) coeffs.push_back(fq_to_json(s.field(), c));
    return Json{{"field", to_json(s.field())},
                {"v", s.valuation()},
                {"N", s.precision()},
                {"coeffs", std::move(coeffs)}};
}

Json to_json(const ELinComb& a) {
    Json out = Json::array();
    for (const auto& [parts, c] : a.terms())
        out.push_back(Json{{"parts", parts}, {"coeff", c.get_str()}});
    return out;
}

Json to_json(const PibarRat& v) {
    return Json{{"value", to_json(v.value)}, {"pibar_degree", v.pibar_degree}};
}

Json to_json(const VerifyReport& rep, bool with_millis) {
    Json j{{"q", rep.q},
           {"k", rep.k},
           {"dmax", rep.dmax},
           {"precision", rep.precision},
           {"match", rep.match},
           {"first_mismatch", rep.first_mismatch ? Json(*rep.first_mismatch) : Json(nullptr)},
           {"exact", to_json(rep.exact)},
           {"numeric", to_json(rep.numeric)}};
    if (with_millis) j["millis"] = rep.millis;
    return j;
}

Field field_from_json(const Json& j) {
    Field f = Field::make(j.at("p").get<uint32_t>(), j.at("e").get<uint32_t>());
    if (j.at("modulus").get<std::vector<uint32_t>>() != f.modulus())
        throw std::invalid_argument("field_from_json: modulus is not the canonical one");
    return f;
}

Fq fq_from_json(const Field& f, const Json& j) {
    auto coords = j.get<std::vector<uint32_t>>();
    if (coords.size() != f.e())
        throw std::invalid_argument("fq_from_json: coordinate count differs from e");
    uint64_t code = 0;
    for (size_t i = coords.size(); i-- > 0;) {
        if (coords[i] >= f.p()) throw std::invalid_argument("fq_from_json: coordinate out of range");
        code = code * f.p() + coords[i];
    }
    return f.from_code(code);
}

Poly poly_from_json(const Json& j) {
    Field f = field_from_json(j.at("field"));
    std::vector<Fq> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(fq_from_json(f, c));
    if (!coeffs.empty() && coeffs.back() == f.zero())
        throw std::invalid_argument("poly_from_json: trailing zero coefficient");
    return Poly(f, std::move(coeffs));
}

RatFun ratfun_from_json(const Json& j) {
    Poly num = poly_from_json(j.at("num"));
    Poly den = poly_from_json(j.at("den"));
    if (!den.is_monic()) throw std::invalid_argument("ratfun_from_json: denominator not monic");
    RatFun r(num, den);
    if (r.num() != num || r.den() != den)
        throw std::invalid_argument("ratfun_from_json: fraction not in lowest terms");
    return r;
}

USeries useries_from_json(const Json& j) {
    Field f = field_from_json(j.at("field"));
    std::vector<Fq> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(fq_from_json(f, c));
    return USeries(f, j.at("v").get<int64_t>(), j.at("N").get<int64_t>(), std::move(coeffs));
}

ELinComb elincomb_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("elincomb_from_json: expected a nonempty array");
    ELinComb out(partition_weight(j.front().at("parts").get<Partition>()));
    for (const auto& term : j) {
        Partition parts = term.at("parts").get<Partition>();
        mpz_class c(term.at("coeff").get<std::string>());
        out.add_term(parts, c);
    }
    return out;
}

PibarRat pibar_from_json(const Json& j) {
    return PibarRat{ratfun_from_json(j.at("value")), j.at("pibar_degree").get<uint64_t>()};
}

} // namespace fqps
