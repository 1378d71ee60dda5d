#include "fqpsums.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <nlohmann/json.hpp>

#include "fqpsums/errors.hpp"
#include "fqpsums/io.hpp"

using namespace fqps;

struct fqps_field {
    Field field;
};

namespace {

thread_local std::string g_last_error;

char *dup_string(const std::string& s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
fqps_status guarded(Fn&& fn) {
    try {
        fn();
        return FQPS_OK;
    } catch (const UnsupportedExponent& e) {
        g_last_error = e.what();
        return FQPS_ERR_UNSUPPORTED_EXPONENT;
    } catch (const ReconstructionFailed& e) {
        g_last_error = e.what();
        return FQPS_ERR_RECONSTRUCTION_FAILED;
    } catch (const LimitExceeded& e) {
        g_last_error = e.what();
        return FQPS_ERR_LIMIT_EXCEEDED;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return FQPS_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return FQPS_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FQPS_ERR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FQPS_ERR_INTERNAL;
    }
}

const Field& unwrap(const fqps_field *field) {
    if (!field) throw std::invalid_argument("null field handle");
    return field->field;
}

std::string render_series(const USeries& s, fqps_format format) {
    return format == FQPS_FORMAT_JSON ? to_json(s).dump() : to_string(s);
}

std::string render_ratfun(const RatFun& r, fqps_format format) {
    return format == FQPS_FORMAT_JSON ? to_json(r).dump() : to_string(r);
}

} // namespace

extern "C" {

fqps_status fqps_field_create(uint32_t q, fqps_field **out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output pointer");
        *out = new fqps_field{Field::from_order(q)};
    });
}

void fqps_field_free(fqps_field *field) { delete field; }

uint32_t fqps_field_char(const fqps_field *field) { return field ? field->field.p() : 0; }

uint32_t fqps_field_ext_degree(const fqps_field *field) { return field ? field->field.e() : 0; }

const char *fqps_status_name(fqps_status status) {
    switch (status) {
        case FQPS_OK: return "ok";
        case FQPS_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FQPS_ERR_UNSUPPORTED_EXPONENT: return "unsupported exponent";
        case FQPS_ERR_RECONSTRUCTION_FAILED: return "reconstruction failed";
        case FQPS_ERR_LIMIT_EXCEEDED: return "limit exceeded";
        case FQPS_ERR_NOMEM: return "out of memory";
        case FQPS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *fqps_last_error(void) { return g_last_error.c_str(); }

void fqps_string_free(char *s) { std::free(s); }

fqps_status fqps_primes(const fqps_field *field, uint32_t max_degree, int count_only,
                        fqps_format format, char **out) {
    return guarded([&] {
        const Field& f = unwrap(field);
        if (!out) throw std::invalid_argument("null output pointer");
        if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
        std::string plain;
        Json jout{{"q", f.q()}, {"max_degree", max_degree}};
        if (count_only) {
            Json counts = Json::array();
            for (uint32_t d = 1; d <= max_degree; ++d) {
                uint64_t n = 0;
                MonicIrreducibleStream s(f, d);
                while (s.next()) ++n;
                counts.push_back(Json{{"degree", d}, {"count", n}});
                plain += std::to_string(d) + " " + std::to_string(n) + "\n";
            }
            jout["counts"] = std::move(counts);
        } else {
            Json primes = Json::array();
            for (uint32_t d = 1; d <= max_degree; ++d) {
                MonicIrreducibleStream s(f, d);
                while (auto p = s.next()) {
                    primes.push_back(to_json(*p));
                    plain += to_string(*p) + "\n";
                }
            }
            jout["primes"] = std::move(primes);
        }
        *out = dup_string(format == FQPS_FORMAT_JSON ? jout.dump() : plain);
    });
}

fqps_status fqps_prime_sum(const fqps_field *field, uint32_t k, uint32_t max_degree,
                           int include_non_monic, uint32_t threads,
                           fqps_format format, char **out) {
    return guarded([&] {
        const Field& f = unwrap(field);
        if (!out) throw std::invalid_argument("null output pointer");
        SumRequest req{f, k, max_degree, include_non_monic == 0};
        USeries s = numeric_prime_sum(req, threads ? threads : 1);
        *out = dup_string(render_series(s, format));
    });
}

fqps_status fqps_zeta(const fqps_field *field, uint32_t k, uint32_t max_degree,
                      fqps_format format, char **out) {
    return guarded([&] {
        const Field& f = unwrap(field);
        if (!out) throw std::invalid_argument("null output pointer");
        *out = dup_string(render_series(numeric_zeta(f, k, max_degree), format));
    });
}

fqps_status fqps_exact_sum(const fqps_field *field, uint32_t k, int include_non_monic,
                           fqps_format format, char **out) {
    return guarded([&] {
        const Field& f = unwrap(field);
        if (!out) throw std::invalid_argument("null output pointer");
        RatFun r = include_non_monic ? exact_all_prime_sum(f, k) : exact_prime_sum(f, k);
        *out = dup_string(render_ratfun(r, format));
    });
}

fqps_status fqps_closed_form(const fqps_field *field, uint32_t k,
                             fqps_format format, char **out, int *applicable) {
    return guarded([&] {
        const Field& f = unwrap(field);
        if (!out) throw std::invalid_argument("null output pointer");
        auto r = closed_form(f, k);
        if (applicable) *applicable = r.has_value() ? 1 : 0;
        if (r)
            *out = dup_string(render_ratfun(*r, format));
        else
            *out = dup_string(format == FQPS_FORMAT_JSON ? "null" : "not applicable");
    });
}

fqps_status fqps_verify(const fqps_field *field, uint32_t k, uint32_t max_degree,
                        uint32_t threads, int with_millis,
                        fqps_format format, char **out, int *match) {
    return guarded([&] {
        const Field& f = unwrap(field);
        if (!out) throw std::invalid_argument("null output pointer");
        VerifyReport rep = verify(f, k, max_degree, threads ? threads : 1);
        if (match) *match = rep.match ? 1 : 0;
        if (format == FQPS_FORMAT_JSON) {
            *out = dup_string(to_json(rep, with_millis != 0).dump());
        } else {
            std::string plain = "match=" + std::string(rep.match ? "true" : "false") +
                                " precision=" + std::to_string(rep.precision);
            if (rep.first_mismatch)
                plain += " first_mismatch=" + std::to_string(*rep.first_mismatch);
            plain += " exact=" + to_string(rep.exact);
            if (with_millis) plain += " millis=" + std::to_string(rep.millis);
            *out = dup_string(plain);
        }
    });
}

fqps_status fqps_reconstruct(const fqps_field *field, uint32_t k, uint32_t max_degree,
                             uint32_t num_deg, uint32_t den_deg, uint32_t threads,
                             fqps_format format, char **out) {
    return guarded([&] {
        const Field& f = unwrap(field);
        if (!out) throw std::invalid_argument("null output pointer");
        SumRequest req{f, k, max_degree, true};
        USeries s = numeric_prime_sum(req, threads ? threads : 1);
        RatFun r = pade_reconstruct(s, num_deg, den_deg);
        *out = dup_string(render_ratfun(r, format));
    });
}

fqps_status fqps_carlitz(const fqps_field *field, uint32_t terms,
                         fqps_format format, char **out) {
    return guarded([&] {
        const Field& f = unwrap(field);
        if (!out) throw std::invalid_argument("null output pointer");
        std::vector<RatFun> coeffs = carlitz_exp_coeffs(f, terms);
        if (format == FQPS_FORMAT_JSON) {
            Json d = Json::array(), c = Json::array();
            for (uint32_t j = 0; j < terms; ++j) {
                d.push_back(to_json(carlitz_D(f, j)));
                c.push_back(to_json(coeffs[j]));
            }
            Json jout{{"q", f.q()}, {"terms", terms}, {"D", std::move(d)}, {"coeffs", std::move(c)}};
            *out = dup_string(jout.dump());
        } else {
            std::string plain;
            for (uint32_t j = 0; j < terms; ++j)
                plain += "D_" + std::to_string(j) + " = " + to_string(carlitz_D(f, j)) + "\n";
            for (uint32_t j = 0; j < terms; ++j)
                plain += "1/D_" + std::to_string(j) + " = " + to_string(coeffs[j]) + "\n";
            *out = dup_string(plain);
        }
    });
}

fqps_status fqps_psi(uint32_t p, uint32_t r, uint64_t *out_count) {
    return guarded([&] {
        if (!out_count) throw std::invalid_argument("null output pointer");
        *out_count = psi_count(p, r);
    });
}

} // extern "C"
