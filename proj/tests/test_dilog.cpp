#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clustervol/dilog.hpp"
#include "clustervol/errors.hpp"
#include "oracles.hpp"

using namespace clustervol;

namespace {

const double ln2 = std::log(2.0);

}  // namespace

TEST_CASE("dilogarithm special values") {
    CHECK(dilog(0.0) == Complex(0.0));
    CHECK(std::abs(dilog(1.0) - pi_sq / 6.0) < 1e-15);
    CHECK(std::abs(dilog(0.5) - (pi_sq / 12.0 - ln2 * ln2 / 2.0)) < 1e-12);
    CHECK(std::abs(dilog(-1.0) + pi_sq / 12.0) < 1e-14);
    CHECK(std::abs(pi_sq / 6.0 - 1.6449340668) < 1e-10);
    CHECK(std::abs(pi_sq / 12.0 - ln2 * ln2 / 2.0 - 0.5822405265) < 1e-10);
}

TEST_CASE("dilogarithm agrees with its power series inside the disk") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Complex z = oracle::random_complex(rng, 0.0, 0.95);
        const auto ref = oracle::dilog_series({z.real(), z.imag()});
        const Complex expected(static_cast<double>(ref.real()), static_cast<double>(ref.imag()));
        CHECK(std::abs(dilog(z) - expected) < 1e-14);
    }
}

TEST_CASE("dilogarithm agrees with quadrature up to |z| = 1000") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> logr(std::log(0.5), std::log(1000.0));
    std::uniform_real_distribution<double> arg(0.15, pi - 0.15);
    std::bernoulli_distribution flip;
    for (int trial = 0; trial < 300; ++trial) {
        const double a = flip(rng) ? arg(rng) : -arg(rng);
        const Complex z = std::polar(std::exp(logr(rng)), a);
        CHECK(std::abs(dilog(z) - oracle::dilog_quadrature(z)) < 1e-13);
    }
}

TEST_CASE("dilogarithm on the cut is the limit from below") {
    // for real x > 1 approached from below:
    // Li2(x) = pi^2/3 - log(x)^2 / 2 - Li2(1/x) - i pi log(x)
    for (double x : {1.5, 2.0, 10.0, 500.0}) {
        const long double inv = 1.0L / x;
        const long double lx = std::log(static_cast<long double>(x));
        const long double re = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 3.0L -
                               lx * lx / 2.0L - oracle::dilog_series(inv).real();
        const Complex below(static_cast<double>(re), static_cast<double>(-std::numbers::pi_v<long double> * lx));
        CHECK(std::abs(dilog(x) - below) < 1e-13);
        CHECK(dilog(x).imag() < 0.0);
    }
    CHECK(std::abs(dilog(2.0) - Complex(pi_sq / 4.0, -pi * ln2)) < 1e-13);
}

TEST_CASE("reflection identity") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 1000; ++trial) {
        const Complex z = oracle::random_complex(rng, 0.05, 20.0);
        if (std::abs(z.imag()) < 1e-3) continue;
        const Complex lhs = dilog(z) + dilog(1.0 - z);
        const Complex rhs = pi_sq / 6.0 - std::log(z) * std::log(1.0 - z);
        CHECK(std::abs(lhs - rhs) < 1e-11);
    }
}

TEST_CASE("Bloch-Wigner function") {
    for (double x : {-3.0, -0.5, 0.25, 0.75, 2.0, 40.0}) CHECK(std::abs(bloch_wigner(x)) < 1e-15);
    const Complex w = std::polar(1.0, pi / 3.0);
    CHECK(std::abs(bloch_wigner(w) - 2.02988 / 2.0) < 1e-5);
    CHECK(std::abs(bloch_wigner(w) - oracle::bloch_wigner_quadrature(w)) < 1e-13);
    CHECK_THROWS_AS(bloch_wigner(0.0), DegenerateModulus);
    CHECK_THROWS_AS(bloch_wigner(1.0), DegenerateModulus);
}

TEST_CASE("Bloch-Wigner symmetries at random points") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 1000; ++trial) {
        const Complex z = oracle::random_complex(rng, 0.05, 20.0);
        const double d = bloch_wigner(z);
        CHECK(std::abs(bloch_wigner(std::conj(z)) + d) < 1e-11);
        CHECK(std::abs(bloch_wigner(1.0 - 1.0 / z) - d) < 1e-11);
        CHECK(std::abs(bloch_wigner(1.0 / (1.0 - z)) - d) < 1e-11);
        CHECK(std::abs(bloch_wigner(1.0 / z) + d) < 1e-11);
    }
}

TEST_CASE("extended Rogers dilogarithm") {
    CHECK(std::abs(extended_rogers(0.5, 0, 0) + pi_sq / 12.0) < 1e-12);
    CHECK(std::abs(extended_rogers(0.5, 0, 0) + 0.8224670334) < 1e-10);
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex z = oracle::random_complex(rng);
        for (long p : {-2L, 1L, 3L})
            for (long q : {-1L, 2L}) {
                const Complex diff = extended_rogers(z, p, q) - extended_rogers(z, 0, 0);
                const Complex expected = Complex(0.0, pi / 2.0) *
                                         (static_cast<double>(q) * std::log(z) +
                                          static_cast<double>(p) * std::log(1.0 - z));
                CHECK(std::abs(diff - expected) < 1e-12);
            }
    }
    const Complex w = std::polar(1.0, pi / 3.0);
    const double im_reference = oracle::dilog_quadrature(w).imag() +
                                0.5 * (std::log(w) * std::log(1.0 - w)).imag();
    CHECK(std::abs(extended_rogers(w, 0, 0).imag() - im_reference) < 1e-12);
    CHECK_THROWS_AS(extended_rogers(1.0, 0, 0), DegenerateModulus);
}

TEST_CASE("explicit 1 - z overload keeps digits near z = 1") {
    const Complex eps(1e-12, 3e-13);
    const Complex z = 1.0 - eps;
    CHECK(std::abs(dilog(z, eps) - oracle::dilog_quadrature(z)) < 1e-12);
    CHECK(std::abs(bloch_wigner(z, eps) - oracle::bloch_wigner_quadrature(z)) < 1e-10);
}
