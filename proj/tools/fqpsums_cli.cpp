// Command-line front end over the shared C API.  Subcommands: primes, sum,
// exact, closed, verify, reconstruct, zeta, carlitz, psi.
//
// Exit codes: 0 success, 1 verification mismatch or reconstruction failure,
// 2 invalid arguments or bounds.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "fqpsums.h"

namespace {

struct FieldDeleter {
    void operator()(fqps_field *f) const { fqps_field_free(f); }
};
using FieldHandle = std::unique_ptr<fqps_field, FieldDeleter>;

struct StringOut {
    char *s = nullptr;
    ~StringOut() { fqps_string_free(s); }
};

int fail(fqps_status st) {
    std::fprintf(stderr, "error: %s: %s\n", fqps_status_name(st), fqps_last_error());
    switch (st) {
        case FQPS_ERR_RECONSTRUCTION_FAILED:
            return 1;
        default:
            return 2;
    }
}

FieldHandle open_field(uint32_t q, int& rc) {
    fqps_field *raw = nullptr;
    fqps_status st = fqps_field_create(q, &raw);
    if (st != FQPS_OK) {
        rc = fail(st);
        return nullptr;
    }
    rc = 0;
    return FieldHandle(raw);
}

// enumeration cost guidance: warn above 10^7 candidate polynomials,
// refuse above 10^9
bool check_enumeration_cost(uint32_t q, uint32_t max_degree) {
    long double cost = std::pow((long double)q, (long double)max_degree);
    if (cost > 1e9L) {
        std::fprintf(stderr, "error: q^max_degree = %.3Lg exceeds 1e9; refusing\n", cost);
        return false;
    }
    if (cost > 1e7L)
        std::fprintf(stderr, "warning: q^max_degree = %.3Lg polynomials will be enumerated\n", cost);
    return true;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"prime-polynomial sums over F_q[T]: exact values, truncated "
                 "T^-1-adic series, and cross checks"};
    app.require_subcommand(1);

    uint32_t q = 2, k = 1, max_degree = 4, num_deg = 0, den_deg = 0;
    uint32_t terms = 3, psi_p = 2, psi_r = 0, threads = 1;
    bool all = false, count_only = false, timing = false;
    std::string format = "plain";

    auto add_common = [&](CLI::App *cmd, bool needs_k, bool needs_degree) {
        cmd->add_option("--q", q, "field order (prime power)")->required();
        if (needs_k) cmd->add_option("--k", k, "exponent k")->required();
        if (needs_degree)
            cmd->add_option("--max-degree", max_degree, "largest polynomial degree enumerated")
                ->required();
        cmd->add_option("--format", format, "output format: plain or json")
            ->check(CLI::IsMember({"plain", "json"}));
    };

    auto *primes = app.add_subcommand("primes", "enumerate monic irreducibles");
    add_common(primes, false, true);
    primes->add_flag("--count-only", count_only, "print per-degree counts instead");

    auto *sum = app.add_subcommand("sum", "truncated sum of G_p(1/P^k) over irreducibles");
    add_common(sum, true, true);
    sum->add_flag("--all", all, "sum over all irreducibles, not only monic");
    sum->add_option("--threads", threads, "worker threads (does not affect output)");

    auto *exact = app.add_subcommand("exact", "exact rational value of the sum");
    add_common(exact, true, false);
    exact->add_flag("--all", all, "sum over all irreducibles, not only monic");

    auto *closed = app.add_subcommand("closed", "closed-form value for small k/(q-1)");
    add_common(closed, true, false);

    auto *verify = app.add_subcommand("verify", "cross-check exact value against the truncated sum");
    add_common(verify, true, true);
    verify->add_option("--threads", threads, "worker threads (does not affect output)");
    verify->add_flag("--timing", timing, "include wall-clock millis in the report");

    auto *reconstruct = app.add_subcommand("reconstruct", "Pade reconstruction from the truncated sum");
    add_common(reconstruct, true, true);
    reconstruct->add_option("--num-deg", num_deg, "numerator degree bound")->required();
    reconstruct->add_option("--den-deg", den_deg, "denominator degree bound")->required();
    reconstruct->add_option("--threads", threads, "worker threads (does not affect output)");

    auto *zeta = app.add_subcommand("zeta", "truncated Goss zeta value");
    add_common(zeta, true, true);

    auto *carlitz = app.add_subcommand("carlitz", "Carlitz products D_j and exponential coefficients");
    carlitz->add_option("--q", q, "field order (prime power)")->required();
    carlitz->add_option("--terms", terms, "number of terms")->required();
    carlitz->add_option("--format", format, "output format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    auto *psi = app.add_subcommand("psi", "count p-tuples with given product exponent and trivial gcd");
    psi->add_option("--p", psi_p, "tuple length (prime)")->required();
    psi->add_option("--r", psi_r, "exponent r")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    fqps_format fmt = format == "json" ? FQPS_FORMAT_JSON : FQPS_FORMAT_PLAIN;

    if (psi->parsed()) {
        uint64_t count = 0;
        fqps_status st = fqps_psi(psi_p, psi_r, &count);
        if (st != FQPS_OK) return fail(st);
        std::printf("%llu\n", (unsigned long long)count);
        return 0;
    }

    int rc = 0;
    FieldHandle field = open_field(q, rc);
    if (!field) return rc;

    if (primes->parsed() || sum->parsed() || verify->parsed() || reconstruct->parsed() ||
        zeta->parsed()) {
        if (!check_enumeration_cost(q, max_degree)) return 2;
    }

    StringOut out;
    fqps_status st = FQPS_OK;
    int exit_code = 0;

    if (primes->parsed()) {
        st = fqps_primes(field.get(), max_degree, count_only, fmt, &out.s);
    } else if (sum->parsed()) {
        st = fqps_prime_sum(field.get(), k, max_degree, all, threads, fmt, &out.s);
    } else if (exact->parsed()) {
        st = fqps_exact_sum(field.get(), k, all, fmt, &out.s);
    } else if (closed->parsed()) {
        st = fqps_closed_form(field.get(), k, fmt, &out.s, nullptr);
    } else if (verify->parsed()) {
        int match = 0;
        st = fqps_verify(field.get(), k, max_degree, threads, timing, fmt, &out.s, &match);
        if (st == FQPS_OK && !match) exit_code = 1;
    } else if (reconstruct->parsed()) {
        st = fqps_reconstruct(field.get(), k, max_degree, num_deg, den_deg, threads, fmt, &out.s);
    } else if (zeta->parsed()) {
        st = fqps_zeta(field.get(), k, max_degree, fmt, &out.s);
    } else if (carlitz->parsed()) {
        st = fqps_carlitz(field.get(), terms, fmt, &out.s);
    }

    if (st != FQPS_OK) return fail(st);
    if (out.s) {
        std::fputs(out.s, stdout);
        size_t len = std::strlen(out.s);
        if (len == 0 || out.s[len - 1] != '\n') std::fputc('\n', stdout);
    }
    return exit_code;
}
