/**
 * @file solver.hpp
 * @brief Periodicity solving along the delta-degeneration and extrapolation of
 *        the complex volume to delta = 0.
 *
 * A problem embeds a small parameter vector into the initial cluster variables
 * x[1] at a given delta and names the residual components Newton imposes.
 * Trajectories are evaluated in binary128.
 *
 * The two named fixtures follow the weighted scaling of R: axis nodes 3i+1 have
 * weight 0, all other nodes weight 1. A fixture imposes the axis residual
 * components, which do not depend on delta for its ansatz; the remaining
 * components vanish as delta -> 0. The volume is evaluated with the first
 * parameter shifted by `shift * delta`.
 */
#pragma once

#include "clustervol/geometry.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace clustervol {

using QuadVector = std::vector<QuadComplex>;

struct SolverSettings {
    double tol = 1e-10;
    int max_iter = 200;
    int max_halvings = 30;
    double fd_step = 1e-7;
    double delta0 = 1e-2;
    double ratio = 0.5;
    int steps = 12;
    int starts = 64;
    std::uint64_t seed = 20240601;
    double dedup_distance = 1e-6;
};

struct PeriodicityProblem {
    BraidWord braid;
    std::string name;
    int parameter_count = 0;
    /// 1-based components of x[m+1] - x[1] that Newton drives to zero.
    std::vector<int> equations;
    /// Evaluation offset of parameter 1, in units of delta.
    double shift = 0.0;
    /// Parameter value of the limiting point named by the ansatz; empty for generic problems.
    ComplexVector reference;
    std::function<QuadVector(const QuadVector& params, double delta)> embed;

    QuadVector initial(const ComplexVector& params, double delta) const;
};

/// x = (a, d, d, 1, a d, a^2 d, a, -d, -d, 1), parameter a; imposes components 4 and 7.
PeriodicityProblem fig8_ansatz(const BraidWord& braid);
/// x = (a, d, d, 1, a d, a^2 d, 1), parameter a; imposes component 4.
PeriodicityProblem trefoil_ansatz(const BraidWord& braid);
/// x_2 = d x_1, x_3 = d x_4, x_{3n+1} = 1, every other entry free; imposes all components.
PeriodicityProblem generic_problem(const BraidWord& braid);

/// Names accepted by make_problem: "auto", "fig8-ansatz", "trefoil-ansatz", "generic".
/// "auto" picks an ansatz when the braid is exactly its word. Throws InvalidArgument.
PeriodicityProblem make_problem(const BraidWord& braid, const std::string& fixture);

/// x[m+1] - x[1] in binary128.
QuadVector quad_residual(const BraidWord& braid, const QuadVector& x0);

enum class NewtonStatus { converged, divergence, singular_jacobian, degenerate_trajectory };

const char* to_string(NewtonStatus s);

struct NewtonResult {
    NewtonStatus status = NewtonStatus::divergence;
    ComplexVector params;
    int iterations = 0;
    double residual = 0.0;  ///< max |imposed component| / max(1, max|x|)
    double condition = 0.0; ///< singular-value ratio of the last Jacobian
    std::string message;

    bool ok() const { return status == NewtonStatus::converged; }
};

/// Damped Gauss-Newton on the imposed components with a central-difference Jacobian.
NewtonResult newton_solve(const PeriodicityProblem& problem, const ComplexVector& start, double delta,
                          const SolverSettings& settings = {});

struct Extrapolation {
    Complex value;
    double error = 0.0;
    int order = 1;
    bool converged = true;
};

/// Richardson extrapolation of samples taken at delta_k = delta_0 r^k, k = 0, 1, ...
Extrapolation richardson(const std::vector<Complex>& values, double ratio);

struct DeltaSample {
    double delta = 0.0;
    ComplexVector params;
    ComplexVector x;              ///< x[1] where the volume is evaluated
    double newton_residual = 0.0;
    double periodicity_residual = 0.0; ///< max|x[m+1] - x[1]| / max(1, max|x[1]|)
    double identity_defect = 0.0; ///< axis-product and completeness defect along the trajectory
    VolumeResult volume;
};

struct SolutionBranch {
    std::string problem;
    int start = 0;  ///< 1-based random start that found the branch, 0 if seeded directly
    std::vector<DeltaSample> samples;
    Extrapolation total;
    Extrapolation bloch_wigner;
    std::optional<double> failure_delta;
    std::string failure;

    bool complete() const { return !failure_delta.has_value(); }
    double vol() const { return total.value.imag(); }
    double cs() const { return -total.value.real(); }
};

/// Evaluates the trajectory and its complex volume at given parameters.
DeltaSample evaluate_sample(const PeriodicityProblem& problem, const ComplexVector& params,
                            double delta, double newton_residual = 0.0);

/// Follows a solution along the delta schedule, warm-starting each step.
SolutionBranch delta_limit(const PeriodicityProblem& problem, const ComplexVector& start,
                           const SolverSettings& settings = {});

/// Random-restart Newton at delta_0, deduplication, and delta-limit of each branch,
/// sorted by extrapolated volume, largest first.
std::vector<SolutionBranch> enumerate_solutions(const PeriodicityProblem& problem,
                                                const SolverSettings& settings = {});

}  // namespace clustervol
