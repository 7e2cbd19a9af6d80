/**
 * @file braid.hpp
 * @brief Braid words, the braiding R-operators on cluster and y-variables, and
 *        cluster patterns along a braid.
 *
 * The generator sigma_i acts on the 7-window x_{3i-2..3i+4} of the (3n+1)-vector.
 * Two independent implementations exist: the closed rational form
 * (`apply_R_closed`, the production path) and the mutation/permutation word
 * (`apply_R_comp`, used as the oracle).
 */
#pragma once

#include "clustervol/cluster.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace clustervol {

struct BraidLetter {
    int generator;  ///< 1..n-1
    int sign;       ///< +1 or -1

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    int strands = 0;
    std::vector<BraidLetter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    int variable_count() const { return 3 * strands + 1; }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Number of components of the braid closure (cycles of the strand permutation).
int closure_components(const BraidWord& word);

enum class ClosureCheck { require_knot, skip };

/// Parses "n=3; 1 -2 1 -2". Letter t stands for sigma_|t|^sign(t); the default
/// strand count is 1 + max|t|. Throws ParseError (1-based token position) or
/// MultiComponent.
BraidWord parse_braid(std::string_view text, ClosureCheck check = ClosureCheck::require_knot);

/// Inverse of parse_braid: "n=3; 1 -2 1 -2".
std::string to_string(const BraidWord& word);

/// Mutation word of R_i^{eps}.
OpWord r_operator_word(int generator, int sign);

namespace detail {

inline void check_window(std::size_t size, int generator) {
    if (generator < 1 || 3 * generator + 4 > static_cast<int>(size))
        throw InvalidArgument("generator index " + std::to_string(generator) +
                              " out of range for " + std::to_string(size) + " variables");
}

template <class S>
void require_nonzero(const S& v, int index, const char* where) {
    if (is_zero(v))
        throw DegenerateSeed(index, std::string("division by zero: x_") + std::to_string(index) +
                                        " = 0 in " + where);
}

}  // namespace detail

/// R_i^{eps} through its closed rational form; entries outside 3i-2..3i+4 pass through.
template <class S>
std::vector<S> apply_R_closed(std::vector<S> x, int generator, int sign) {
    detail::check_window(x.size(), generator);
    const int o = 3 * generator - 3;  // x_a of the window is x[o + a - 1]
    const S x1 = x[o], x2 = x[o + 1], x3 = x[o + 2], x4 = x[o + 3], x5 = x[o + 4],
            x6 = x[o + 5], x7 = x[o + 6];
    if (sign > 0) {
        detail::require_nonzero(x2, o + 2, "R");
        detail::require_nonzero(x4, o + 4, "R");
        detail::require_nonzero(x6, o + 6, "R");
        const S t135 = x1 * x3 * x5;
        const S t345 = x3 * x4 * x5;
        const S t126 = x1 * x2 * x6;
        x[o + 1] = x5;
        x[o + 2] = S(t135 + t345 + t126) / S(x2 * x4);
        x[o + 3] = S(S(t135 * x4) + S(t345 * x4) + S(t135 * x7) + S(t345 * x7) + S(t126 * x7)) /
                   S(x2 * x4 * x6);
        x[o + 4] = S(t345 + S(x3 * x5 * x7) + S(x2 * x6 * x7)) / S(x4 * x6);
        x[o + 5] = x3;
    } else if (sign < 0) {
        detail::require_nonzero(x3, o + 3, "R^-1");
        detail::require_nonzero(x4, o + 4, "R^-1");
        detail::require_nonzero(x5, o + 5, "R^-1");
        const S t135 = x1 * x3 * x5;
        const S t126 = x1 * x2 * x6;
        const S t246 = x2 * x4 * x6;
        x[o + 1] = S(t135 + t126 + t246) / S(x3 * x4);
        x[o + 2] = x6;
        x[o + 3] = S(S(t126 * x4) + S(t246 * x4) + S(t135 * x7) + S(t126 * x7) + S(t246 * x7)) /
                   S(x3 * x4 * x5);
        x[o + 4] = x2;
        x[o + 5] = S(t246 + S(x3 * x5 * x7) + S(x2 * x6 * x7)) / S(x4 * x5);
    } else {
        throw InvalidArgument("braid sign must be +1 or -1");
    }
    return x;
}

/// R_i^{eps} as the word of four mutations and three transpositions.
/// The exchange matrix must come back unchanged; InvalidArgument otherwise.
template <class S>
ClusterSeed<S> apply_R_comp(const ClusterSeed<S>& seed, int generator, int sign) {
    detail::check_window(seed.x.size(), generator);
    ClusterSeed<S> out = apply_word(seed, r_operator_word(generator, sign));
    if (!(out.b == seed.b)) throw InvalidArgument("R-operator changed the exchange matrix");
    return out;
}

/// R_i^{eps} acting on y-variables (closed form). Throws SingularY on a vanishing denominator.
template <class S>
std::vector<S> apply_R_y(std::vector<S> y, int generator, int sign) {
    detail::check_window(y.size(), generator);
    const int o = 3 * generator - 3;
    const S y1 = y[o], y2 = y[o + 1], y3 = y[o + 2], y4 = y[o + 3], y5 = y[o + 4],
            y6 = y[o + 5], y7 = y[o + 6];
    auto nonzero = [&](const S& d, int local) {
        if (is_zero(d))
            throw SingularY(o + local, "singular y-action: vanishing denominator at window entry " +
                                           std::to_string(local));
    };
    if (sign > 0) {
        const S a = S(1) + y2 + S(y2 * y4);                                  // 1+y2+y2y4
        const S c = S(1) + y6 + S(y4 * y6);                                  // 1+y6+y4y6
        const S d = S(1) + y2 + y6 + S(y2 * y6) + S(y2 * y4 * y6);          // 1+y2+y6+y2y6+y2y4y6
        nonzero(d, 2);
        nonzero(S(y2 * y4), 3);
        nonzero(S(a * c), 4);
        nonzero(S(y4 * y6), 5);
        y[o] = y1 * a;
        y[o + 1] = S(y2 * y4 * y5 * y6) / d;
        y[o + 2] = d / S(y2 * y4);
        y[o + 3] = y4 / S(a * c);
        y[o + 4] = d / S(y4 * y6);
        y[o + 5] = S(y2 * y3 * y4 * y6) / d;
        y[o + 6] = c * y7;
    } else if (sign < 0) {
        const S a = S(1) + y4 + S(y3 * y4);                                  // 1+y4+y3y4
        const S c = S(1) + y4 + S(y4 * y5);                                  // 1+y4+y4y5
        const S d = S(1) + y4 + S(y3 * y4) + S(y4 * y5) + S(y3 * y4 * y5);  // 1+y4+y3y4+y4y5+y3y4y5
        nonzero(a, 1);
        nonzero(d, 2);
        nonzero(S(y3 * y4 * y5), 4);
        nonzero(c, 7);
        y[o] = S(y1 * y3 * y4) / a;
        y[o + 1] = y5 / d;
        y[o + 2] = d * y6;
        y[o + 3] = S(a * c) / S(y3 * y4 * y5);
        y[o + 4] = y2 * d;
        y[o + 5] = y3 / d;
        y[o + 6] = S(y4 * y5 * y7) / c;
    } else {
        throw InvalidArgument("braid sign must be +1 or -1");
    }
    return y;
}

/// Parameter of the central edge of the crossing octahedron for R_i^{±1}:
/// the output of the first mutation mu_{3i+1}, (x_{3i-1}x_{3i+3} + x_{3i}x_{3i+2}) / x_{3i+1}.
template <class S>
S central_edge(const std::vector<S>& x, int generator) {
    detail::check_window(x.size(), generator);
    const int o = 3 * generator - 3;
    detail::require_nonzero(x[o + 3], o + 4, "central edge");
    return S(S(x[o + 1] * x[o + 5]) + S(x[o + 2] * x[o + 4])) / x[o + 3];
}

/// x[1], x[2] = R^{eps_1}_{k_1} x[1], ..., x[m+1].
template <class S>
struct ClusterTrajectory {
    BraidWord braid;
    std::vector<std::vector<S>> seeds;  ///< m+1 vectors of length 3n+1
    std::vector<S> central;             ///< x_c of crossing j (0-based j)

    const std::vector<S>& initial() const { return seeds.front(); }
    const std::vector<S>& final() const { return seeds.back(); }
};

/// Runs the cluster pattern with the closed-form R. A DegenerateSeed error
/// carries the 1-based step index in `step()`.
template <class S>
ClusterTrajectory<S> run_pattern(const BraidWord& braid, std::vector<S> x0) {
    if (static_cast<int>(x0.size()) != braid.variable_count())
        throw InvalidArgument("initial vector must have 3n+1 = " +
                              std::to_string(braid.variable_count()) + " entries");
    ClusterTrajectory<S> traj{braid, {}, {}};
    traj.seeds.reserve(braid.letters.size() + 1);
    traj.seeds.push_back(std::move(x0));
    int step = 0;
    for (const BraidLetter& letter : braid.letters) {
        ++step;
        try {
            const std::vector<S>& cur = traj.seeds.back();
            traj.central.push_back(central_edge(cur, letter.generator));
            traj.seeds.push_back(apply_R_closed(cur, letter.generator, letter.sign));
        } catch (DegenerateSeed& e) {
            e.set_step(step);
            throw;
        }
    }
    return traj;
}

/// x[m+1] - x[1].
template <class S>
std::vector<S> periodicity_residual(const BraidWord& braid, const std::vector<S>& x0) {
    ClusterTrajectory<S> traj = run_pattern(braid, x0);
    std::vector<S> r(x0.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = S(traj.final()[k] - x0[k]);
    return r;
}

}  // namespace clustervol
