#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clustervol/verify.hpp"

using namespace clustervol;

namespace {

RationalVector one_to_ten() {
    RationalVector x;
    for (int k = 1; k <= 10; ++k) x.emplace_back(k);
    return x;
}

// The displayed ten-tuple at x = (1, ..., 10), evaluated by hand from its polynomials.
std::vector<std::string> audited_image() {
    return {"1", "8", "702/35", "1291/35", "422/21", "87/8", "7265/168", "1789/84", "3", "10"};
}

}  // namespace

TEST_CASE("every shipped identity passes 100 trials") {
    const auto cases = identity_cases();
    CHECK(cases.size() >= 15);
    for (const IdentityCase& c : cases) {
        INFO(c.name);
        const IdentityResult r = check_identity(c, 100, 7);
        CHECK(r.passed);
        CHECK(r.trials == 100);
        CHECK_FALSE(r.witness.has_value());
        CHECK_FALSE(c.description.empty());
    }
}

TEST_CASE("required identities are present") {
    for (const char* name : {"braid-relation", "far-commutativity", "r-inverse", "r-jones", "half-periodicity-35",
                             "half-periodicity-26", "b-invariance", "axis-invariance", "completeness",
                             "commuting-square", "closed-vs-comp", "homogeneity", "mutation-involution"})
        CHECK_MESSAGE(find_identity_case(name).has_value(), name);
    CHECK_FALSE(find_identity_case("no-such-case").has_value());
}

TEST_CASE("braid relation image at an audited point") {
    const RationalVector x = one_to_ten();
    const RationalVector image = braid_relation_image(x);
    const auto expected = audited_image();
    REQUIRE(image.size() == 10);
    for (int k = 0; k < 10; ++k) CHECK(image[k].get_str() == expected[k]);
    const auto lhs = apply_R_closed(apply_R_closed(apply_R_closed(x, 1, 1), 2, 1), 1, 1);
    const auto rhs = apply_R_closed(apply_R_closed(apply_R_closed(x, 2, 1), 1, 1), 2, 1);
    CHECK(lhs == image);
    CHECK(rhs == image);
    CHECK_THROWS_AS(braid_relation_image(RationalVector(7, Rational(1))), InvalidArgument);
}

TEST_CASE("a corrupted closed-form R is caught quickly with a witness") {
    const auto c = find_identity_case("closed-vs-comp", {true});
    REQUIRE(c.has_value());
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const IdentityResult r = check_identity(*c, 100, seed);
        CHECK_FALSE(r.passed);
        CHECK(r.trials <= 5);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->trial == r.trials);
        CHECK(r.witness->component > 0);
        CHECK(r.witness->lhs != r.witness->rhs);
        CHECK_FALSE(r.witness->point.empty());
    }
    const auto braid = find_identity_case("braid-relation-explicit", {true});
    REQUIRE(braid.has_value());
    CHECK_FALSE(check_identity(*braid, 100, 9).passed);
}

TEST_CASE("results are deterministic in the seed") {
    const auto c = find_identity_case("closed-vs-comp", {true});
    REQUIRE(c.has_value());
    const IdentityResult a = check_identity(*c, 100, 123);
    const IdentityResult b = check_identity(*c, 100, 123);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->point == b.witness->point);
    CHECK(a.witness->lhs == b.witness->lhs);

    std::mt19937_64 r1(5), r2(5);
    CHECK(random_positive_point(12, r1) == random_positive_point(12, r2));
}

TEST_CASE("sampling domain") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 2000; ++k) {
        const Rational q = random_positive_rational(rng);
        CHECK(q > 0);
        CHECK(q.get_num() <= 100);
        CHECK(q.get_den() <= 100);
        CHECK(q.get_num() >= 1);
    }
}

TEST_CASE("custom cases: mismatch, size mismatch and throwing sides") {
    const IdentityCase wrong{"wrong", "x1 + x2 = x1 x2", 2,
                             [](const RationalVector& x) { return RationalVector{x[0] + x[1]}; },
                             [](const RationalVector& x) { return RationalVector{x[0] * x[1]}; }};
    const IdentityResult r = check_identity(wrong, 100, 1);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->component == 1);
    CHECK(r.witness->point.size() == 2);

    const IdentityCase sizes{"sizes", "", 1, [](const RationalVector& x) { return x; },
                             [](const RationalVector& x) { return RationalVector{x[0], x[0]}; }};
    const IdentityResult s = check_identity(sizes, 10, 1);
    CHECK_FALSE(s.passed);
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->component == 0);

    const IdentityCase throws{"throws", "", 7, [](const RationalVector& x) { return x; },
                              [](const RationalVector& x) {
                                  RationalVector v = x;
                                  v[3] = 0;
                                  return apply_R_closed(v, 1, 1);
                              }};
    const IdentityResult t = check_identity(throws, 10, 1);
    CHECK_FALSE(t.passed);
    REQUIRE(t.witness.has_value());
    CHECK(t.witness->trial == 1);
    CHECK_FALSE(t.witness->error.empty());

    CHECK_THROWS_AS(check_identity(wrong, 0, 1), InvalidArgument);
}

TEST_CASE("braid relation survives 500 trials") {
    const auto c = find_identity_case("braid-relation");
    REQUIRE(c.has_value());
    CHECK(check_identity(*c, 500, 20240601).passed);
}
