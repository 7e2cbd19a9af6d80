/**
 * @file geometry.hpp
 * @brief Flattened ideal tetrahedra, the four-tetrahedron octahedron of a crossing,
 *        and the complex volume of a cluster trajectory.
 *
 * Each tetrahedron stores two ratio ledgers: the edge-parameter quotient equal
 * to z, and the one equal to 1/(1-z). The flattening integers come from the
 * individual principal logs of the ledger factors:
 *
 *     p pi i = sum(+-log factor) - log z,   q pi i = sum(+-log factor) - log(1/(1-z)).
 *
 * The ledger's overall sign sits inside the value whose log is subtracted; it
 * is never logged on its own.
 */
#pragma once

#include "clustervol/braid.hpp"
#include "clustervol/dilog.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace clustervol {

struct LedgerFactor {
    std::string source;  ///< "x3", "~x5" (output window) or "xc"
    Complex value;
    int power;           ///< +1 numerator, -1 denominator
};

/// sign * prod value^power.
struct Ledger {
    int sign = 1;
    std::vector<LedgerFactor> factors;

    Complex value() const;
    /// sum power * log(value) over factors, principal branch.
    Complex log_sum() const;
};

struct IdealTetrahedron {
    char label = 'N';
    int sign = 1;
    Complex z;
    Complex one_minus_z;  ///< reciprocal of the 1/(1-z) ledger value
    long p = 0;
    long q = 0;
    double p_residual = 0.0;
    double q_residual = 0.0;
    Ledger z_ledger;
    Ledger w_ledger;

    /// L([z; p, q]), without the sign.
    Complex rogers() const;
    /// sign * D(z).
    double signed_volume() const;
};

struct CrossingOctahedron {
    int step = 0;  ///< 1-based crossing index j
    int generator = 1;
    int sign = 1;
    std::array<Complex, 7> x_in{};
    std::array<Complex, 7> x_out{};
    Complex xc;
    std::array<IdealTetrahedron, 4> tetrahedra;  ///< N, S, W, E
};

/// Tolerance on the distance of p, q from the nearest integer.
inline constexpr double flattening_tolerance = 1e-6;

/// Tetrahedra of one crossing from the windows before and after R_i^{eps}.
/// Throws DegenerateModulus, or FlatteningError when p, q are not integral or the
/// two ledgers disagree.
CrossingOctahedron build_octahedron(std::span<const Complex> x_in, std::span<const Complex> x_out,
                                    Complex xc, int sign);

/// sum_t sign_t L([z_t; p_t, q_t]).
Complex crossing_dilog(const CrossingOctahedron& oct);

/// sum_t sign_t D(z_t).
double crossing_bloch_wigner(const CrossingOctahedron& oct);

/// Representative of v modulo pi^2 in (-pi^2/2, pi^2/2].
double reduce_mod_pi_sq(double v);

struct VolumeResult {
    Complex total;
    double vol = 0.0;          ///< Im total
    double cs = 0.0;           ///< -Re total
    double cs_reduced = 0.0;   ///< cs modulo pi^2
    double bloch_wigner = 0.0; ///< sum of sign D over every tetrahedron
    double max_flattening_residual = 0.0;
    std::vector<CrossingOctahedron> crossings;
};

/// One octahedron per letter, summed left to right. Errors carry the 1-based crossing index.
VolumeResult complex_volume(const ClusterTrajectory<Complex>& traj);

}  // namespace clustervol
