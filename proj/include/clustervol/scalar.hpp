// Scalar fields the cluster calculus is instantiated over.
//
// Every algebraic routine is a template over a field type S that provides
// +, -, *, /, == and construction from int. Three instances are used:
//
// - Complex      double-precision complex numbers (volume computation)
// - QuadComplex  binary128 complex numbers (near-singular trajectories)
// - Rational     GMP big rationals (exact identity testing)
#pragma once

#include <boost/multiprecision/complex128.hpp>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace clustervol {

using Complex = std::complex<double>;
using QuadComplex = boost::multiprecision::complex128;
using Rational = mpq_class;

using ComplexVector = std::vector<Complex>;

template <class S>
inline bool is_zero(const S& v) {
    return v == S(0);
}

/// v^e for any integer e; e < 0 requires v != 0.
template <class S>
S pow_int(const S& v, int e) {
    S base = v;
    S out(1);
    if (e < 0) {
        base = S(1) / v;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

template <class S>
S from_complex(const Complex& c);

template <>
inline Complex from_complex<Complex>(const Complex& c) {
    return c;
}

template <>
inline QuadComplex from_complex<QuadComplex>(const Complex& c) {
    return QuadComplex(c.real(), c.imag());
}

inline Complex to_complex(const Complex& c) { return c; }

inline Complex to_complex(const QuadComplex& c) {
    return {static_cast<double>(c.real()), static_cast<double>(c.imag())};
}

inline Complex to_complex(const Rational& q) { return {q.get_d(), 0.0}; }

template <class S>
std::vector<S> convert_vector(std::span<const Complex> v) {
    std::vector<S> out;
    out.reserve(v.size());
    for (const Complex& c : v) out.push_back(from_complex<S>(c));
    return out;
}

template <class S>
ComplexVector to_complex_vector(std::span<const S> v) {
    ComplexVector out;
    out.reserve(v.size());
    for (const S& s : v) out.push_back(to_complex(s));
    return out;
}

/// Relative/absolute closeness used by floating-point invariant checks.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
};

inline bool close(const Complex& a, const Complex& b, Tolerance tol = {}) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(tol.abs, tol.rel * scale);
}

inline bool close(std::span<const Complex> a, std::span<const Complex> b,
                  Tolerance tol = {}) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close(a[i], b[i], tol)) return false;
    return true;
}

inline double max_abs(std::span<const Complex> v) {
    double m = 0.0;
    for (const Complex& c : v) m = std::max(m, std::abs(c));
    return m;
}

/// Principal logarithm with arg in (-pi, pi]; a signed zero imaginary part is
/// treated as +0 so the negative real axis is approached from above.
inline Complex principal_log(Complex z) {
    if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
    return std::log(z);
}

inline double principal_arg(Complex z) {
    if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
    return std::arg(z);
}

}  // namespace clustervol
