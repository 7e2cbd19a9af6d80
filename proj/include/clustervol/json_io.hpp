// JSON forms of trajectories, volumes, branches and identity results.
//
// Complex numbers are written as [re, im]. Non-finite doubles become null.
#pragma once

#include "clustervol/solver.hpp"
#include "clustervol/verify.hpp"

#include <json.hpp>

namespace clustervol {

using Json = nlohmann::ordered_json;

Json complex_json(Complex c);
Json complex_json(std::span<const Complex> v);
/// Parses [re, im], a bare number, or an array of either. Throws InvalidArgument.
Complex complex_from_json(const Json& j);
ComplexVector complex_vector_from_json(const Json& j);

Json to_json(const IdealTetrahedron& t);
Json to_json(const CrossingOctahedron& oct);
/// {vol, cs, cs_reduced, total, bloch_wigner, crossings}
Json to_json(const VolumeResult& v);
Json to_json(const Extrapolation& e);
Json to_json(const DeltaSample& s);
/// Summary plus per-sample records and the full breakdown at the smallest delta.
Json to_json(const SolutionBranch& b);
Json to_json(const SolverSettings& s);
Json to_json(const Witness& w);
Json to_json(const IdentityResult& r, const std::string& description);

}  // namespace clustervol
