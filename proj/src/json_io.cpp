#include "clustervol/json_io.hpp"

#include <cmath>

namespace clustervol {

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json complex_json(Complex c) { return Json::array({number(c.real()), number(c.imag())}); }

Json complex_json(std::span<const Complex> v) {
    Json out = Json::array();
    for (const Complex& c : v) out.push_back(complex_json(c));
    return out;
}

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw InvalidArgument("expected a number or a [re, im] pair, got " + j.dump());
}

ComplexVector complex_vector_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("expected an array of complex numbers");
    ComplexVector out;
    for (const Json& e : j) out.push_back(complex_from_json(e));
    return out;
}

Json to_json(const IdealTetrahedron& t) {
    return {{"label", std::string(1, t.label)},
            {"sign", t.sign},
            {"z", complex_json(t.z)},
            {"p", t.p},
            {"q", t.q},
            {"L", complex_json(t.rogers())},
            {"p_residual", number(t.p_residual)},
            {"q_residual", number(t.q_residual)}};
}

Json to_json(const CrossingOctahedron& oct) {
    Json tets = Json::array();
    for (const IdealTetrahedron& t : oct.tetrahedra) tets.push_back(to_json(t));
    return {{"j", oct.step},
            {"i", oct.generator},
            {"eps", oct.sign},
            {"xc", complex_json(oct.xc)},
            {"L", complex_json(crossing_dilog(oct))},
            {"tetrahedra", tets}};
}

Json to_json(const VolumeResult& v) {
    Json crossings = Json::array();
    for (const CrossingOctahedron& c : v.crossings) crossings.push_back(to_json(c));
    return {{"vol", number(v.vol)},
            {"cs", number(v.cs)},
            {"cs_reduced", number(v.cs_reduced)},
            {"total", complex_json(v.total)},
            {"bloch_wigner", number(v.bloch_wigner)},
            {"max_flattening_residual", number(v.max_flattening_residual)},
            {"crossings", crossings}};
}

Json to_json(const Extrapolation& e) {
    return {{"value", complex_json(e.value)},
            {"error", number(e.error)},
            {"order", e.order},
            {"converged", e.converged}};
}

Json to_json(const DeltaSample& s) {
    return {{"delta", s.delta},
            {"params", complex_json(s.params)},
            {"newton_residual", number(s.newton_residual)},
            {"periodicity_residual", number(s.periodicity_residual)},
            {"identity_defect", number(s.identity_defect)},
            {"max_flattening_residual", number(s.volume.max_flattening_residual)},
            {"total", complex_json(s.volume.total)},
            {"bloch_wigner", number(s.volume.bloch_wigner)}};
}

Json to_json(const SolutionBranch& b) {
    Json samples = Json::array();
    for (const DeltaSample& s : b.samples) samples.push_back(to_json(s));
    Json out = {{"problem", b.problem},
                {"start", b.start},
                {"complete", b.complete()},
                {"vol", number(b.vol())},
                {"cs", number(b.cs())},
                {"cs_reduced", number(reduce_mod_pi_sq(b.cs()))},
                {"total", to_json(b.total)},
                {"bloch_wigner", to_json(b.bloch_wigner)}};
    if (b.failure_delta) {
        out["failure_delta"] = *b.failure_delta;
        out["failure"] = b.failure;
    }
    out["samples"] = samples;
    if (!b.samples.empty()) {
        const DeltaSample& last = b.samples.back();
        out["smallest_delta"] = {{"delta", last.delta},
                                 {"x", complex_json(last.x)},
                                 {"volume", to_json(last.volume)}};
    }
    return out;
}

Json to_json(const SolverSettings& s) {
    return {{"tol", s.tol},
            {"max_iter", s.max_iter},
            {"max_halvings", s.max_halvings},
            {"fd_step", s.fd_step},
            {"delta0", s.delta0},
            {"ratio", s.ratio},
            {"steps", s.steps},
            {"starts", s.starts},
            {"seed", s.seed},
            {"dedup_distance", s.dedup_distance}};
}

Json to_json(const Witness& w) {
    Json point = Json::array();
    for (const Rational& q : w.point) point.push_back(q.get_str());
    Json out = {{"trial", w.trial}, {"point", point}, {"component", w.component}};
    if (w.error.empty()) {
        out["lhs"] = w.lhs;
        out["rhs"] = w.rhs;
    } else {
        out["error"] = w.error;
    }
    return out;
}

Json to_json(const IdentityResult& r, const std::string& description) {
    Json out = {{"name", r.name},
                {"description", description},
                {"passed", r.passed},
                {"trials", r.trials}};
    if (r.witness) out["witness"] = to_json(*r.witness);
    return out;
}

}  // namespace clustervol
