// clustervol: complex volumes of braid closures from cluster mutations.
//
//   clustervol compute --braid "1 -2 1 -2"
//   clustervol verify [--case braid-relation] [--trials 500]
//   clustervol trace --braid "1 1 1" --fixture trefoil-ansatz --delta 1e-3
//
// Exit codes: 0 success, 1 usage or parse error, 2 no converged solution,
// 3 numeric failure (degenerate trajectory, failed identity).

#include "clustervol/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace clustervol;

namespace {

enum Exit { ok = 0, usage = 1, no_solution = 2, numeric = 3 };

struct RunConfig {
    std::string braid;
    int strands = 0;
    std::string fixture = "auto";
    std::string trace_fixture;
    double delta = 1e-3;
    std::string x0;
    SolverSettings solver;
    std::string json_out;
    std::string case_name;
    int trials = 100;
    int digits = 10;
    bool inject_corruption = false;
};

std::string braid_text(const RunConfig& cfg) {
    if (cfg.strands > 0) return "n=" + std::to_string(cfg.strands) + "; " + cfg.braid;
    return cfg.braid;
}

Json config_json(const RunConfig& cfg, const std::string& mode) {
    Json j = {{"mode", mode}, {"braid", cfg.braid}};
    if (cfg.strands > 0) j["strands"] = cfg.strands;
    j["digits"] = cfg.digits;
    j["seed"] = cfg.solver.seed;
    if (mode == "compute") {
        j["fixture"] = cfg.fixture;
        j["solver"] = to_json(cfg.solver);
    } else if (mode == "verify") {
        j["case"] = cfg.case_name.empty() ? Json(nullptr) : Json(cfg.case_name);
        j["trials"] = cfg.trials;
        j["inject_corruption"] = cfg.inject_corruption;
    } else {
        j["fixture"] = cfg.trace_fixture.empty() ? Json(nullptr) : Json(cfg.trace_fixture);
        j["delta"] = cfg.delta;
        if (!cfg.x0.empty()) j["x0"] = Json::parse(cfg.x0);
    }
    return j;
}

void emit(const RunConfig& cfg, const Json& out) {
    const std::string text = out.dump(2) + "\n";
    if (cfg.json_out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.json_out);
    if (!f) throw InvalidArgument("cannot open " + cfg.json_out + " for writing");
    f << text;
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

int cmd_compute(const RunConfig& cfg) {
    const BraidWord braid = parse_braid(braid_text(cfg));
    const PeriodicityProblem problem = make_problem(braid, cfg.fixture);
    const std::vector<SolutionBranch> branches = enumerate_solutions(problem, cfg.solver);

    Json out = {{"config", config_json(cfg, "compute")},
                {"braid", to_string(braid)},
                {"problem", problem.name}};
    Json list = Json::array();
    Json summary = Json::array();
    bool any = false;
    for (std::size_t k = 0; k < branches.size(); ++k) {
        const SolutionBranch& b = branches[k];
        any = any || (b.complete() && !b.samples.empty());
        list.push_back(to_json(b));
        summary.push_back("branch " + std::to_string(k + 1) + ": vol = " + fixed(b.vol(), cfg.digits) +
                          ", cs = " + fixed(b.cs(), cfg.digits) + ", error = " +
                          fixed(b.total.error, cfg.digits));
    }
    out["branch_count"] = branches.size();
    out["summary"] = summary;
    out["branches"] = list;
    emit(cfg, out);
    if (!any) {
        std::cerr << "clustervol: no converged solution branch\n";
        return no_solution;
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg) {
    const VerifyOptions options{cfg.inject_corruption};
    std::vector<IdentityCase> cases;
    if (cfg.case_name.empty()) {
        cases = identity_cases(options);
    } else {
        auto c = find_identity_case(cfg.case_name, options);
        if (!c) throw InvalidArgument("unknown identity case \"" + cfg.case_name + "\"");
        cases.push_back(std::move(*c));
    }
    Json results = Json::array();
    bool all = true;
    for (const IdentityCase& c : cases) {
        const IdentityResult r = check_identity(c, cfg.trials, cfg.solver.seed);
        all = all && r.passed;
        results.push_back(to_json(r, c.description));
    }
    emit(cfg, {{"config", config_json(cfg, "verify")}, {"passed", all}, {"cases", results}});
    if (!all) {
        std::cerr << "clustervol: identity check failed\n";
        return numeric;
    }
    return ok;
}

int cmd_trace(const RunConfig& cfg) {
    const BraidWord braid = parse_braid(braid_text(cfg));
    QuadVector x0;
    Json fixture_info;
    if (!cfg.x0.empty()) {
        x0 = convert_vector<QuadComplex>(complex_vector_from_json(Json::parse(cfg.x0)));
    } else if (!cfg.trace_fixture.empty()) {
        const PeriodicityProblem problem = make_problem(braid, cfg.trace_fixture);
        if (problem.reference.empty())
            throw InvalidArgument("fixture \"" + problem.name + "\" has no reference point; pass --x0");
        if (!(cfg.delta > 0.0)) throw InvalidArgument("--delta must be positive");
        const NewtonResult nr = newton_solve(problem, problem.reference, cfg.delta, cfg.solver);
        const ComplexVector& p = nr.ok() ? nr.params : problem.reference;
        fixture_info = {{"name", problem.name},
                        {"reference", complex_json(problem.reference)},
                        {"newton", to_string(nr.status)},
                        {"newton_residual", nr.residual},
                        {"params", complex_json(p)}};
        x0 = problem.initial(p, cfg.delta);
    } else {
        x0.assign(braid.variable_count(), QuadComplex(1));
    }

    const ClusterTrajectory<QuadComplex> traj = run_pattern(braid, x0);
    Json seeds = Json::array();
    for (const QuadVector& s : traj.seeds) seeds.push_back(complex_json(to_complex_vector<QuadComplex>(s)));
    double residual = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < x0.size(); ++k) {
        residual = std::max(residual, std::abs(to_complex(traj.final()[k] - x0[k])));
        scale = std::max(scale, std::abs(to_complex(x0[k])));
    }

    Json out = {{"config", config_json(cfg, "trace")},
                {"braid", to_string(braid)}};
    if (!fixture_info.is_null()) out["fixture"] = fixture_info;
    out["seeds"] = seeds;
    out["central"] = complex_json(to_complex_vector<QuadComplex>(traj.central));
    if (braid.strands >= 2) {
        const ExchangeMatrix b = build_exchange_matrix(braid.strands);
        Json ys = Json::array();
        try {
            for (const QuadVector& s : traj.seeds)
                ys.push_back(complex_json(
                    to_complex_vector<QuadComplex>(y_from_x(ClusterSeed<QuadComplex>{s, b}).y)));
            out["y"] = ys;
        } catch (const DegenerateSeed& e) {
            out["y_error"] = e.what();
        }
    }
    out["residual"] = residual;
    out["residual_relative"] = residual / scale;
    emit(cfg, out);
    return ok;
}

void add_braid_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--braid", cfg.braid, "braid word, e.g. \"1 -2 1 -2\" or \"n=3; 1 -2\"");
    cmd->add_option("--strands", cfg.strands, "strand count (default 1 + max generator)")
        ->check(CLI::PositiveNumber);
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--seed", cfg.solver.seed, "random seed");
    cmd->add_option("--json-out", cfg.json_out, "write JSON here instead of stdout");
    cmd->add_option("--digits", cfg.digits, "digits in the text summary")->check(CLI::Range(1, 17));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex volumes of braid closures from cluster mutations"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* compute = app.add_subcommand("compute", "solve the periodicity condition and report the complex volume");
    add_braid_flags(compute, cfg);
    add_common_flags(compute, cfg);
    compute->add_option("--fixture", cfg.fixture, "auto, fig8-ansatz, trefoil-ansatz or generic");
    compute->add_option("--delta0", cfg.solver.delta0, "largest delta of the schedule");
    compute->add_option("--ratio", cfg.solver.ratio, "ratio between successive deltas");
    compute->add_option("--steps", cfg.solver.steps, "number of deltas")->check(CLI::PositiveNumber);
    compute->add_option("--starts", cfg.solver.starts, "random Newton starts")->check(CLI::NonNegativeNumber);
    compute->add_option("--tol", cfg.solver.tol, "Newton residual tolerance");
    compute->add_option("--max-iter", cfg.solver.max_iter, "Newton iteration limit");

    CLI::App* verify = app.add_subcommand("verify", "exact randomized identity checks");
    add_common_flags(verify, cfg);
    verify->add_option("--case", cfg.case_name, "run one named case");
    verify->add_option("--trials", cfg.trials, "random points per case")->check(CLI::PositiveNumber);
    verify->add_flag("--inject-corruption", cfg.inject_corruption, "flip a sign in the closed-form R")
        ->group("");

    CLI::App* trace = app.add_subcommand("trace", "print the cluster pattern along a braid");
    add_braid_flags(trace, cfg);
    add_common_flags(trace, cfg);
    trace->add_option("--fixture", cfg.trace_fixture, "fig8-ansatz or trefoil-ansatz at its reference point");
    trace->add_option("--delta", cfg.delta, "degeneration parameter for --fixture");
    trace->add_option("--x0", cfg.x0, "initial vector as JSON, e.g. [[1,0],[0.5,0],...]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (compute->parsed()) return cmd_compute(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        return cmd_trace(cfg);
    } catch (const ParseError& e) {
        std::cerr << "clustervol: parse error at token " << e.position() << ": " << e.what() << "\n";
        return usage;
    } catch (const MultiComponent& e) {
        std::cerr << "clustervol: " << e.what() << "\n";
        return usage;
    } catch (const InvalidArgument& e) {
        std::cerr << "clustervol: " << e.what() << "\n";
        return usage;
    } catch (const Json::exception& e) {
        std::cerr << "clustervol: invalid JSON: " << e.what() << "\n";
        return usage;
    } catch (const DegenerateSeed& e) {
        std::cerr << "clustervol: degenerate trajectory at step " << e.step() << ": " << e.what() << "\n";
        return numeric;
    } catch (const Error& e) {
        std::cerr << "clustervol: " << e.what() << "\n";
        return numeric;
    }
}
