// Randomized exact identity testing of cluster and braid identities.
//
// Both sides of an identity are rational maps Q^N -> Q^M. They are evaluated
// with GMP rationals at random positive points (numerator and denominator in
// 1..100); every exchange polynomial is subtraction-free, so no evaluation
// divides by zero. One mismatch refutes the identity.
#pragma once

#include "clustervol/braid.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace clustervol {

using RationalVector = std::vector<Rational>;
using RationalMap = std::function<RationalVector(const RationalVector&)>;

struct IdentityCase {
    std::string name;
    std::string description;
    int arity = 0;
    RationalMap lhs;
    RationalMap rhs;
};

struct Witness {
    int trial = 0;                 ///< 1-based
    RationalVector point;
    int component = 0;             ///< 1-based first differing component, 0 for a size mismatch or error
    std::string lhs;
    std::string rhs;
    std::string error;             ///< exception text when a side threw
};

struct IdentityResult {
    std::string name;
    bool passed = false;
    int trials = 0;
    std::optional<Witness> witness;
};

struct VerifyOptions {
    /// Test hook: flips one sign inside the closed-form R^{+1}.
    bool corrupt_closed_form = false;
};

/// Uniform positive rational a/b with 1 <= a, b <= 100, canonicalized.
Rational random_positive_rational(std::mt19937_64& rng);
RationalVector random_positive_point(int size, std::mt19937_64& rng);

/// Evaluates both sides at `trials` random points; stops at the first mismatch.
IdentityResult check_identity(const IdentityCase& c, int trials, std::uint64_t seed);

/// Every shipped identity, in a fixed order.
std::vector<IdentityCase> identity_cases(VerifyOptions options = {});

/// Looks a case up by name; std::nullopt if unknown.
std::optional<IdentityCase> find_identity_case(const std::string& name, VerifyOptions options = {});

/// The explicit ten-component image of (x_1..x_10) under R_1 R_2 R_1 (= R_2 R_1 R_2).
RationalVector braid_relation_image(const RationalVector& x);

}  // namespace clustervol
