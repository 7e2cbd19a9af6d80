#include "clustervol/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace clustervol {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr double inf = std::numeric_limits<double>::infinity();

QuadVector to_quad(const ComplexVector& v) { return convert_vector<QuadComplex>(v); }

ComplexVector to_double(const QuadVector& v) { return to_complex_vector<QuadComplex>(v); }

double max_abs(const QuadVector& v) {
    double m = 0.0;
    for (const QuadComplex& c : v) m = std::max(m, std::abs(to_complex(c)));
    return m;
}

bool all_finite(const QuadVector& v) {
    for (const QuadComplex& c : v) {
        const Complex d = to_complex(c);
        if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) return false;
    }
    return true;
}

bool same_word(const BraidWord& braid, std::string_view text) {
    const BraidWord w = parse_braid(text);
    return braid.strands == w.strands && braid.letters == w.letters;
}

// Imposed residual components, scaled by max(1, max|x|). Throws DegenerateSeed.
struct ImposedResidual {
    const PeriodicityProblem& problem;
    double delta;

    Vector operator()(const QuadVector& params, double* scale = nullptr) const {
        const QuadVector x = problem.embed(params, delta);
        const QuadVector r = quad_residual(problem.braid, x);
        if (!all_finite(r)) throw DegenerateSeed(0, "trajectory is not finite");
        if (scale) *scale = std::max(1.0, max_abs(x));
        Vector out(problem.equations.size());
        for (std::size_t e = 0; e < problem.equations.size(); ++e)
            out[static_cast<Eigen::Index>(e)] = to_complex(r[problem.equations[e] - 1]);
        return out;
    }

    // Central differences, computed from binary128 evaluations.
    Matrix jacobian(const ComplexVector& params, double fd_step) const {
        const auto p = static_cast<Eigen::Index>(params.size());
        Matrix j(static_cast<Eigen::Index>(problem.equations.size()), p);
        for (Eigen::Index k = 0; k < p; ++k) {
            const double h = fd_step * std::max(1.0, std::abs(params[k]));
            QuadVector plus = to_quad(params), minus = to_quad(params);
            plus[k] += QuadComplex(h);
            minus[k] -= QuadComplex(h);
            const QuadVector xp = problem.embed(plus, delta), xm = problem.embed(minus, delta);
            const QuadVector rp = quad_residual(problem.braid, xp),
                             rm = quad_residual(problem.braid, xm);
            for (std::size_t e = 0; e < problem.equations.size(); ++e) {
                const int c = problem.equations[e] - 1;
                j(static_cast<Eigen::Index>(e), k) = to_complex((rp[c] - rm[c]) / QuadComplex(2 * h));
            }
        }
        return j;
    }
};

double scaled_norm(const Vector& r, double scale) { return r.cwiseAbs().maxCoeff() / scale; }

}  // namespace

QuadVector PeriodicityProblem::initial(const ComplexVector& params, double delta) const {
    return embed(to_quad(params), delta);
}

PeriodicityProblem fig8_ansatz(const BraidWord& braid) {
    if (braid.strands != 3) throw InvalidArgument("fig8-ansatz needs a 3-strand braid");
    PeriodicityProblem p;
    p.braid = braid;
    p.name = "fig8-ansatz";
    p.parameter_count = 1;
    p.equations = {4, 7};
    p.shift = 1.0;
    p.reference = {std::polar(1.0, 2.0 * pi / 3.0)};
    p.embed = [](const QuadVector& v, double delta) {
        const QuadComplex a = v.at(0), d(delta), one(1);
        return QuadVector{a, d, d, one, a * d, a * a * d, a, -d, -d, one};
    };
    return p;
}

PeriodicityProblem trefoil_ansatz(const BraidWord& braid) {
    if (braid.strands != 2) throw InvalidArgument("trefoil-ansatz needs a 2-strand braid");
    PeriodicityProblem p;
    p.braid = braid;
    p.name = "trefoil-ansatz";
    p.parameter_count = 1;
    p.equations = {4};
    p.shift = 0.0;
    p.reference = {Complex(-0.5, -0.5)};
    p.embed = [](const QuadVector& v, double delta) {
        const QuadComplex a = v.at(0), d(delta), one(1);
        return QuadVector{a, d, d, one, a * d, a * a * d, one};
    };
    return p;
}

PeriodicityProblem generic_problem(const BraidWord& braid) {
    const int size = braid.variable_count();
    std::vector<int> free;
    for (int k = 1; k <= size; ++k)
        if (k != 2 && k != 3 && k != size) free.push_back(k);
    PeriodicityProblem p;
    p.braid = braid;
    p.name = "generic";
    p.parameter_count = static_cast<int>(free.size());
    for (int k = 1; k <= size; ++k) p.equations.push_back(k);
    p.embed = [free, size](const QuadVector& v, double delta) {
        QuadVector x(size, QuadComplex(1));
        for (std::size_t f = 0; f < free.size(); ++f) x[free[f] - 1] = v.at(f);
        const QuadComplex d(delta);
        x[1] = d * x[0];
        x[2] = d * x[3];
        return x;
    };
    return p;
}

PeriodicityProblem make_problem(const BraidWord& braid, const std::string& fixture) {
    if (fixture == "fig8-ansatz") return fig8_ansatz(braid);
    if (fixture == "trefoil-ansatz") return trefoil_ansatz(braid);
    if (fixture == "generic") return generic_problem(braid);
    if (fixture == "auto") {
        if (same_word(braid, "1 -2 1 -2")) return fig8_ansatz(braid);
        if (same_word(braid, "1 1 1")) return trefoil_ansatz(braid);
        return generic_problem(braid);
    }
    throw InvalidArgument("unknown fixture \"" + fixture +
                          "\" (expected auto, fig8-ansatz, trefoil-ansatz or generic)");
}

QuadVector quad_residual(const BraidWord& braid, const QuadVector& x0) {
    return periodicity_residual(braid, x0);
}

const char* to_string(NewtonStatus s) {
    switch (s) {
        case NewtonStatus::converged: return "converged";
        case NewtonStatus::divergence: return "divergence";
        case NewtonStatus::singular_jacobian: return "singular jacobian";
        case NewtonStatus::degenerate_trajectory: return "degenerate trajectory";
    }
    return "unknown";
}

NewtonResult newton_solve(const PeriodicityProblem& problem, const ComplexVector& start, double delta,
                          const SolverSettings& settings) {
    if (static_cast<int>(start.size()) != problem.parameter_count)
        throw InvalidArgument("start has " + std::to_string(start.size()) + " parameters, expected " +
                              std::to_string(problem.parameter_count));
    if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
    const ImposedResidual F{problem, delta};
    NewtonResult out;
    out.params = start;

    double scale = 1.0;
    Vector r;
    try {
        r = F(to_quad(out.params), &scale);
    } catch (const DegenerateSeed& e) {
        out.status = NewtonStatus::degenerate_trajectory;
        out.message = std::string(e.what()) + " at step " + std::to_string(e.step());
        return out;
    }

    for (out.iterations = 0;; ++out.iterations) {
        out.residual = scaled_norm(r, scale);
        if (out.residual <= settings.tol) {
            out.status = NewtonStatus::converged;
            return out;
        }
        if (out.iterations >= settings.max_iter) {
            out.status = NewtonStatus::divergence;
            out.message = "no convergence in " + std::to_string(settings.max_iter) + " iterations";
            return out;
        }

        Matrix j;
        try {
            j = F.jacobian(out.params, settings.fd_step);
        } catch (const DegenerateSeed& e) {
            out.status = NewtonStatus::degenerate_trajectory;
            out.message = std::string("Jacobian stencil hit: ") + e.what();
            return out;
        }
        const Eigen::JacobiSVD<Matrix> svd(j);
        const auto& sv = svd.singularValues();
        out.condition = sv.size() && sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : inf;
        if (!(out.condition < 1e13)) {
            out.status = NewtonStatus::singular_jacobian;
            out.message = "singular Jacobian, condition estimate " + std::to_string(out.condition);
            return out;
        }
        const Vector step = -j.completeOrthogonalDecomposition().solve(r);

        const double merit = r.squaredNorm();
        double t = 1.0;
        bool accepted = false;
        for (int h = 0; h <= settings.max_halvings; ++h, t *= 0.5) {
            ComplexVector trial = out.params;
            for (std::size_t k = 0; k < trial.size(); ++k)
                trial[k] += t * step[static_cast<Eigen::Index>(k)];
            try {
                double trial_scale = 1.0;
                Vector rt = F(to_quad(trial), &trial_scale);
                if (rt.squaredNorm() <= (1.0 - 2e-4 * t) * merit) {
                    out.params = std::move(trial);
                    r = std::move(rt);
                    scale = trial_scale;
                    accepted = true;
                    break;
                }
            } catch (const DegenerateSeed&) {
            }
        }
        if (!accepted) {
            out.status = NewtonStatus::divergence;
            out.message = "line search failed after " + std::to_string(settings.max_halvings) +
                          " halvings, residual " + std::to_string(out.residual);
            return out;
        }
    }
}

Extrapolation richardson(const std::vector<Complex>& values, double ratio) {
    const std::size_t n = values.size();
    if (n == 0) return {0.0, inf, 1, false};
    if (n == 1) return {values.front(), inf, 1, false};
    if (std::all_of(values.begin(), values.end(), [&](Complex v) { return v == values.front(); }))
        return {values.front(), 0.0, 1, true};

    int order = 1;
    if (n >= 3) {
        const double d1 = std::abs(values[n - 1] - values[n - 2]);
        const double d0 = std::abs(values[n - 2] - values[n - 3]);
        if (d0 > 0.0 && d1 > 0.0)
            order = std::clamp(static_cast<int>(std::lround(std::log(d1 / d0) / std::log(ratio))), 1, 4);
    }

    // Best level of the table built from the first m values.
    auto best = [&](std::size_t m) {
        std::vector<Complex> level(values.begin(), values.begin() + m);
        Extrapolation e{level.back(), std::abs(level[m - 1] - level[m - 2]), order, true};
        for (std::size_t j = 1; j + 1 < m; ++j) {
            const double f = std::pow(ratio, order + static_cast<int>(j) - 1);
            std::vector<Complex> next(m, 0.0);
            for (std::size_t k = j; k < m; ++k)
                next[k] = level[k] + (level[k] - level[k - 1]) * (f / (1.0 - f));
            level = std::move(next);
            const double diff = std::abs(level[m - 1] - level[m - 2]);
            if (diff < e.error) {
                e.value = level[m - 1];
                e.error = diff;
            }
        }
        return e;
    };

    Extrapolation e = best(n);
    if (n >= 3) {
        const Extrapolation previous = best(n - 1);
        e.converged = e.error <= previous.error || e.error <= 1e-12 * std::max(1.0, std::abs(e.value));
    }
    return e;
}

DeltaSample evaluate_sample(const PeriodicityProblem& problem, const ComplexVector& params, double delta,
                            double newton_residual) {
    DeltaSample s;
    s.delta = delta;
    s.params = params;
    s.newton_residual = newton_residual;
    QuadVector p = to_quad(params);
    if (!p.empty()) p[0] += QuadComplex(problem.shift * delta);
    const QuadVector x = problem.embed(p, delta);
    const ClusterTrajectory<QuadComplex> traj = run_pattern(problem.braid, x);

    double residual = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        residual = std::max(residual, std::abs(to_complex(traj.final()[k] - x[k])));
    s.periodicity_residual = residual / std::max(1.0, max_abs(x));

    if (problem.braid.strands >= 2) {
        const ExchangeMatrix b = build_exchange_matrix(problem.braid.strands);
        auto rel = [](const QuadComplex& a, const QuadComplex& c) {
            const Complex u = to_complex(a), v = to_complex(c);
            return std::abs(u - v) / std::max({1.0, std::abs(u), std::abs(v)});
        };
        std::vector<QuadVector> ys;
        for (const QuadVector& seed : traj.seeds) ys.push_back(y_from_x(ClusterSeed<QuadComplex>{seed, b}).y);
        for (std::size_t j = 0; j < ys.size(); ++j)
            for (int i = 1; i <= problem.braid.strands; ++i)
                s.identity_defect = std::max(
                    s.identity_defect, rel(ys[j][3 * i - 2] * ys[j][3 * i - 1], QuadComplex(1)));
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            const int o = 3 * problem.braid.letters[j].generator - 3;
            auto axis = [o](const QuadVector& y) { return y[o] * y[o + 3] * y[o + 6]; };
            s.identity_defect = std::max(s.identity_defect, rel(axis(ys[j]), axis(ys[j + 1])));
        }
    }

    ClusterTrajectory<Complex> dtraj{problem.braid, {}, to_double(traj.central)};
    for (const QuadVector& seed : traj.seeds) dtraj.seeds.push_back(to_double(seed));
    s.x = dtraj.seeds.front();
    s.volume = complex_volume(dtraj);
    return s;
}

SolutionBranch delta_limit(const PeriodicityProblem& problem, const ComplexVector& start,
                           const SolverSettings& settings) {
    if (!(settings.delta0 > 0.0) || !(settings.ratio > 0.0 && settings.ratio < 1.0) || settings.steps < 1)
        throw InvalidArgument("delta schedule must be strictly decreasing: need delta0 > 0, 0 < ratio < 1, steps >= 1");
    SolutionBranch branch;
    branch.problem = problem.name;
    ComplexVector params = start;
    double delta = settings.delta0;
    for (int k = 0; k < settings.steps; ++k, delta *= settings.ratio) {
        const NewtonResult nr = newton_solve(problem, params, delta, settings);
        if (!nr.ok()) {
            branch.failure_delta = delta;
            branch.failure = std::string(to_string(nr.status)) + ": " + nr.message;
            break;
        }
        params = nr.params;
        try {
            branch.samples.push_back(evaluate_sample(problem, params, delta, nr.residual));
        } catch (const Error& e) {
            branch.failure_delta = delta;
            branch.failure = e.what();
            break;
        }
    }
    std::vector<Complex> totals, bw;
    for (const DeltaSample& s : branch.samples) {
        totals.push_back(s.volume.total);
        bw.emplace_back(s.volume.bloch_wigner, 0.0);
    }
    branch.total = richardson(totals, settings.ratio);
    branch.bloch_wigner = richardson(bw, settings.ratio);
    return branch;
}

std::vector<SolutionBranch> enumerate_solutions(const PeriodicityProblem& problem,
                                                const SolverSettings& settings) {
    std::mt19937_64 rng(settings.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::pair<ComplexVector, int>> roots;
    for (int s = 1; s <= settings.starts; ++s) {
        ComplexVector start(problem.parameter_count);
        for (Complex& c : start) {
            const double re = normal(rng);
            const double im = normal(rng);
            c = {re, im};
        }
        const NewtonResult nr = newton_solve(problem, start, settings.delta0, settings);
        if (!nr.ok()) continue;
        const bool duplicate = std::any_of(roots.begin(), roots.end(), [&](const auto& r) {
            double d = 0.0;
            for (std::size_t k = 0; k < nr.params.size(); ++k)
                d = std::max(d, std::abs(nr.params[k] - r.first[k]));
            return d < settings.dedup_distance;
        });
        if (!duplicate) roots.emplace_back(nr.params, s);
    }

    std::vector<SolutionBranch> branches;
    for (const auto& [params, s] : roots) {
        SolutionBranch b = delta_limit(problem, params, settings);
        b.start = s;
        branches.push_back(std::move(b));
    }
    std::stable_sort(branches.begin(), branches.end(), [](const SolutionBranch& a, const SolutionBranch& b) {
        if (a.samples.empty() != b.samples.empty()) return b.samples.empty();
        return a.vol() > b.vol();
    });
    return branches;
}

}  // namespace clustervol
