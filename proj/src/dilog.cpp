#include "clustervol/dilog.hpp"

#include "clustervol/errors.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include <array>

namespace clustervol {

namespace {

constexpr int series_terms = 20;  // even Bernoulli terms B_2 .. B_40

// c[k] = B_{2k} / (2k+1)!, so Li_2 = u - u^2/4 + sum_k c[k] u^{2k+1}, u = -log(1-z).
const std::array<double, series_terms + 1>& bernoulli_coefficients() {
    static const auto table = [] {
        std::array<double, series_terms + 1> c{};
        for (int k = 1; k <= series_terms; ++k)
            c[k] = boost::math::bernoulli_b2n<double>(k) /
                   boost::math::factorial<double>(static_cast<unsigned>(2 * k + 1));
        return c;
    }();
    return table;
}

// For |z| <= 1 and Re z <= 1/2, where |u| < 1.8.
Complex bernoulli_series(Complex one_minus_z) {
    const auto& c = bernoulli_coefficients();
    const Complex u = -principal_log(one_minus_z);
    const Complex u2 = u * u;
    Complex sum = 0.0;
    for (int k = series_terms; k >= 1; --k) sum = (sum + c[k]) * u2;
    return u - u2 / 4.0 + u * sum;
}

// Requires |z| <= 1.
Complex dilog_unit_disk(Complex z, Complex omz) {
    if (z.real() <= 0.5) return bernoulli_series(omz);
    // Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
    return pi_sq / 6.0 - principal_log(z) * principal_log(omz) - bernoulli_series(z);
}

void require_nondegenerate(Complex z, Complex omz) {
    if (z == 0.0 || omz == 0.0 || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DegenerateModulus("degenerate modulus: z must avoid 0, 1 and infinity");
}

}  // namespace

Complex dilog(Complex z) { return dilog(z, 1.0 - z); }

Complex dilog(Complex z, Complex omz) {
    if (z == 0.0) return 0.0;
    if (omz == 0.0) return pi_sq / 6.0;
    if (std::norm(z) <= 1.0) return dilog_unit_disk(z, omz);
    // Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2, with 1 - 1/z = -(1-z)/z.
    const Complex inv = 1.0 / z;
    const Complex l = principal_log(-z);
    return -dilog_unit_disk(inv, -omz / z) - pi_sq / 6.0 - 0.5 * l * l;
}

double bloch_wigner(Complex z) { return bloch_wigner(z, 1.0 - z); }

double bloch_wigner(Complex z, Complex omz) {
    require_nondegenerate(z, omz);
    return dilog(z, omz).imag() + principal_arg(omz) * std::log(std::abs(z));
}

Complex extended_rogers(Complex z, long p, long q) { return extended_rogers(z, 1.0 - z, p, q); }

Complex extended_rogers(Complex z, Complex omz, long p, long q) {
    require_nondegenerate(z, omz);
    const Complex log_z = principal_log(z);
    const Complex log_omz = principal_log(omz);
    const Complex half_pi_i(0.0, pi / 2.0);
    return dilog(z, omz) + 0.5 * log_z * log_omz +
           half_pi_i * (static_cast<double>(q) * log_z + static_cast<double>(p) * log_omz) -
           pi_sq / 6.0;
}

}  // namespace clustervol
