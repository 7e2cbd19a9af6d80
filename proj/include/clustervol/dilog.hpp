// Principal-branch dilogarithm, Bloch-Wigner function and the extended
// Rogers dilogarithm L([z; p, q]).
//
// Logarithms are principal (arg in (-pi, pi]). On the cut z in (1, inf) the
// dilogarithm takes the value continuous from Im z < 0, which is what the
// principal log(1 - z) produces.
//
// Every function has an overload taking 1 - z explicitly.
#pragma once

#include "clustervol/scalar.hpp"

#include <numbers>

namespace clustervol {

inline constexpr double pi = std::numbers::pi;
inline constexpr double pi_sq = std::numbers::pi * std::numbers::pi;

/// Li_2(z), |error| < 1e-13 for |z| <= 1e3.
Complex dilog(Complex z);
Complex dilog(Complex z, Complex one_minus_z);

/// D(z) = Im Li_2(z) + arg(1-z) log|z|. Throws DegenerateModulus at z = 0, 1.
double bloch_wigner(Complex z);
double bloch_wigner(Complex z, Complex one_minus_z);

/// L([z;p,q]) = Li_2(z) + log z log(1-z)/2 + (pi i/2)(q log z + p log(1-z)) - pi^2/6.
/// Throws DegenerateModulus at z = 0, 1.
Complex extended_rogers(Complex z, long p, long q);
Complex extended_rogers(Complex z, Complex one_minus_z, long p, long q);

}  // namespace clustervol
