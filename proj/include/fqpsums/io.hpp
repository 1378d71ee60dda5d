#ifndef FQPSUMS_IO_HPP
#define FQPSUMS_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "fqpsums/carlitz.hpp"
#include "fqpsums/laurent.hpp"
#include "fqpsums/primesum.hpp"
#include "fqpsums/ratfun.hpp"
#include "fqpsums/symfun.hpp"

namespace fqps {

using Json = nlohmann::ordered_json;

/* Text forms.  Polynomials render sparsely, highest degree first: over a
 * prime field "T^4+T^2+1" or "2*T^3+1"; over an extension the coefficients
 * are parenthesized polynomials in g, e.g. "(g+1)*T^2+g".  Rational
 * functions render as "(num)/(den)" with "/(1)" omitted; series render as
 * "u^4 + u^6 + O(u^9)". */
std::string fq_to_string(const Field& f, Fq a);
std::string to_string(const Poly& p);
std::string to_string(const RatFun& r);
std::string to_string(const USeries& s);
std::string to_string(const ELinComb& a);

// JSON schemas:
//   FieldDesc  {p, e, modulus: [c0..ce]}
//   FqElem     [c0..c_{e-1}]
//   Poly       {field, coeffs: [FqElem...]}
//   RatFun     {num: Poly, den: Poly}
//   USeries    {field, v, N, coeffs: [FqElem...]}
//   ELinComb   [{parts: [...], coeff: "decimal"}...] in partition order
//   PibarRat   {value: RatFun, pibar_degree}
Json to_json(const Field& f);
Json fq_to_json(const Field& f, Fq a);
Json to_json(const Poly& p);
Json to_json(const RatFun& r);
Json to_json(const USeries& s);
Json to_json(const ELinComb& a);
Json to_json(const PibarRat& v);
// verify report: {q, k, dmax, precision, match, first_mismatch, exact,
// numeric} plus millis when requested (timing breaks byte-for-byte
// reproducibility, so it is opt-in)
Json to_json(const VerifyReport& rep, bool with_millis = false);

Field field_from_json(const Json& j);
Fq fq_from_json(const Field& f, const Json& j);
Poly poly_from_json(const Json& j);
RatFun ratfun_from_json(const Json& j);
USeries useries_from_json(const Json& j);
ELinComb elincomb_from_json(const Json& j);
PibarRat pibar_from_json(const Json& j);

} // namespace fqps

#endif
