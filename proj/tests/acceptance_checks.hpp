// Acceptance criteria shared by the full and the solver-free acceptance binaries.
#pragma once

#include "clustervol/dilog.hpp"
#include "clustervol/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace acceptance {

using namespace clustervol;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

class Report {
public:
    bool run(int number, const std::string& title, double seconds_limit, const std::function<Outcome()>& check) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && s > seconds_limit) {
            o.ok = false;
            o.detail = "runtime " + std::to_string(s) + " s over the " + std::to_string(seconds_limit) + " s limit";
        }
        std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", number, title.c_str(), s,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
        all_ = all_ && o.ok;
        return o.ok;
    }

    bool all() const { return all_; }

private:
    bool all_ = true;
};

inline Outcome exchange_matrix_golden() {
    Outcome o;
    o.require(build_exchange_matrix(2).rows() == oracle::exchange_matrix_7(), "7x7 exchange matrix differs");
    return o;
}

inline Outcome closed_matches_composition() {
    Outcome o;
    std::mt19937_64 rng(1001);
    for (int n : {2, 3}) {
        const ExchangeMatrix b = build_exchange_matrix(n);
        for (int trial = 0; trial < 100; ++trial) {
            const ClusterSeed<Rational> s{random_positive_point(3 * n + 1, rng), b};
            for (int i = 1; i < n; ++i)
                for (int eps : {1, -1})
                    o.require(apply_R_closed(s.x, i, eps) == apply_R_comp(s, i, eps).x,
                              "closed and composed R differ at n=" + std::to_string(n));
        }
    }
    return o;
}

inline Outcome run_cases(std::initializer_list<const char*> names, Outcome o = {}) {
    for (const char* name : names) {
        const auto c = find_identity_case(name);
        o.require(c.has_value(), std::string("missing case ") + name);
        if (!c) continue;
        const IdentityResult r = check_identity(*c, 100, 20240601);
        o.require(r.passed && r.trials == 100, std::string(name) + " failed");
    }
    return o;
}

inline Outcome braid_relation() {
    Outcome o;
    RationalVector x;
    for (int k = 1; k <= 10; ++k) x.emplace_back(k);
    // the displayed ten-tuple evaluated by hand at x = (1, ..., 10)
    const std::vector<std::string> audited{"1", "8", "702/35", "1291/35", "422/21",
                                           "87/8", "7265/168", "1789/84", "3", "10"};
    const RationalVector lhs = apply_R_closed(apply_R_closed(apply_R_closed(x, 1, 1), 2, 1), 1, 1);
    for (int k = 0; k < 10; ++k) o.require(lhs[k].get_str() == audited[k], "audited point differs");
    o.require(braid_relation_image(x) == lhs, "displayed tuple differs from R1 R2 R1");
    return run_cases({"braid-relation", "braid-relation-explicit", "far-commutativity"}, o);
}

inline Outcome identity_suite() {
    return run_cases({"r-jones", "half-periodicity-35", "half-periodicity-26", "b-invariance", "axis-invariance",
                      "completeness", "commuting-square"});
}

inline Outcome dilogarithm_layer() {
    Outcome o;
    const double ln2 = std::log(2.0);
    o.require(std::abs(dilog(0.5) - (pi_sq / 12.0 - ln2 * ln2 / 2.0)) < 1e-12, "dilog(1/2)");
    o.require(std::abs(extended_rogers(0.5, 0, 0) + pi_sq / 12.0) < 1e-12, "extended_rogers(1/2, 0, 0)");
    o.require(std::abs(bloch_wigner(std::polar(1.0, pi / 3.0)) - 1.01494) < 1e-5, "D(e^{i pi/3})");
    std::mt19937_64 rng(1005);
    for (int trial = 0; trial < 1000; ++trial) {
        const Complex z = oracle::random_complex(rng, 0.05, 20.0);
        const double d = bloch_wigner(z);
        o.require(std::abs(bloch_wigner(1.0 - 1.0 / z) - d) < 1e-11, "D(1 - 1/z) = D(z)");
        o.require(std::abs(bloch_wigner(1.0 / (1.0 - z)) - d) < 1e-11, "D(1/(1 - z)) = D(z)");
        o.require(std::abs(bloch_wigner(std::conj(z)) + d) < 1e-11, "D(conj z) = -D(z)");
    }
    return o;
}

inline bool run_property_suite(Report& report) {
    bool ok = true;
    ok &= report.run(1, "exchange matrix for n=2 matches the 7x7 quiver", 1e-3, exchange_matrix_golden);
    ok &= report.run(2, "closed-form R equals the mutation word, n=2,3, 100 seeds", 5.0, closed_matches_composition);
    ok &= report.run(3, "braid relation (n=3), far commutativity (n=4), audited ten-tuple", 10.0, braid_relation);
    ok &= report.run(4, "Jones form, half periodicities, B, axis, completeness, commuting square", 20.0,
                     identity_suite);
    ok &= report.run(5, "dilogarithm values and Bloch-Wigner symmetries", 2.0, dilogarithm_layer);
    return ok;
}

}  // namespace acceptance
