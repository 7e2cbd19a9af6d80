#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clustervol/cluster.hpp"
#include "oracles.hpp"

using namespace clustervol;

namespace {

std::vector<Rational> random_rationals(int size, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, 100);
    std::vector<Rational> v;
    for (int k = 0; k < size; ++k) {
        Rational q(d(rng), d(rng));
        q.canonicalize();
        v.push_back(q);
    }
    return v;
}

}  // namespace

TEST_CASE("exchange matrix n=2 matches the single crossing quiver") {
    const ExchangeMatrix b = build_exchange_matrix(2);
    CHECK(b.rows() == oracle::exchange_matrix_7());
    CHECK(b(1, 2) == 1);
    CHECK(b(2, 1) == -1);
    CHECK(b(1, 1) == 0);
}

TEST_CASE("exchange matrix n=3 matches the hand-expanded block rule") {
    const ExchangeMatrix b = build_exchange_matrix(3);
    REQUIRE(b.size() == 10);
    ExchangeMatrix expected(10);
    for (const auto& e : oracle::exchange_matrix_10_upper()) expected.set_pair(e.i, e.j, e.v);
    CHECK(b == expected);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) CHECK(b(i, j) == build_exchange_matrix(2)(i, j));
}

TEST_CASE("exchange matrix rejects fewer than two strands") {
    CHECK_THROWS_AS(build_exchange_matrix(1), InvalidArgument);
    CHECK_THROWS_AS(build_exchange_matrix(0), InvalidArgument);
    CHECK_THROWS_AS(ExchangeMatrix::from_rows({{0, 1}, {1, 0}}), InvalidArgument);
}

TEST_CASE("x-mutation at 4 of the all-ones seed") {
    const ClusterSeed<Rational> s{std::vector<Rational>(7, Rational(1)), build_exchange_matrix(2)};
    const auto m = mutate(s, 4);
    // x4 -> (x2 x6 + x3 x5) / x4 = 2
    for (int k = 1; k <= 7; ++k) CHECK(m.at(k) == (k == 4 ? Rational(2) : Rational(1)));
}

TEST_CASE("matrix mutation at 4") {
    const ExchangeMatrix b = build_exchange_matrix(2);
    const ExchangeMatrix m = mutate(b, 4);
    for (int j = 1; j <= 7; ++j) {
        CHECK(m(4, j) == -b(4, j));
        CHECK(m(j, 4) == -b(j, 4));
    }
    // b23 + (|b24| b43 + b24 |b43|) / 2 = 0 + (1 + 1) / 2
    CHECK(m(2, 3) == 1);
    CHECK(m.is_skew_symmetric());
}

TEST_CASE("mutation is an involution") {
    std::mt19937_64 rng(11);
    for (int n : {2, 3}) {
        const ExchangeMatrix b = build_exchange_matrix(n);
        for (int trial = 0; trial < 10; ++trial) {
            const ClusterSeed<Rational> s{random_rationals(3 * n + 1, rng), b};
            for (int k = 1; k <= s.size(); ++k) CHECK(mutate(mutate(s, k), k) == s);

            ComplexVector x;
            for (int k = 0; k < s.size(); ++k) x.push_back(oracle::random_complex(rng));
            const ClusterSeed<Complex> c{x, b};
            for (int k = 1; k <= c.size(); ++k) {
                const auto back = mutate(mutate(c, k), k);
                CHECK(back.b == c.b);
                CHECK(close(back.x, c.x, {1e-12, 0.0}));
            }
        }
    }
}

TEST_CASE("mutations commute when b_jk = 0") {
    std::mt19937_64 rng(12);
    const ExchangeMatrix b = build_exchange_matrix(3);
    const ClusterSeed<Rational> s{random_rationals(10, rng), b};
    int pairs = 0;
    for (int j = 1; j <= 10; ++j)
        for (int k = j + 1; k <= 10; ++k)
            if (b(j, k) == 0) {
                ++pairs;
                CHECK(mutate(mutate(s, j), k) == mutate(mutate(s, k), j));
            }
    CHECK(pairs > 0);
}

TEST_CASE("mutation and permutation keep B skew-symmetric") {
    ExchangeMatrix b = build_exchange_matrix(3);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> pick(1, 10);
    for (int step = 0; step < 50; ++step) {
        b = mutate(b, pick(rng));
        CHECK(b.is_skew_symmetric());
        const int i = pick(rng), j = pick(rng);
        if (i != j) b = permute(b, i, j);
        CHECK(b.is_skew_symmetric());
    }
}

TEST_CASE("mutating positive seeds stays positive") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> pick(1, 10);
    ClusterSeed<Rational> s{random_rationals(10, rng), build_exchange_matrix(3)};
    for (int step = 0; step < 25; ++step) {
        s = mutate(s, pick(rng));
        for (const Rational& v : s.x) CHECK(v > 0);
    }
}

TEST_CASE("mutation at a vanishing variable names the index") {
    std::vector<Rational> x(7, Rational(1));
    x[4] = 0;
    const ClusterSeed<Rational> s{x, build_exchange_matrix(2)};
    try {
        (void)mutate(s, 5);
        FAIL("expected DegenerateSeed");
    } catch (const DegenerateSeed& e) {
        CHECK(e.index() == 5);
    }
    CHECK_THROWS_AS((void)mutate(s, 8), InvalidArgument);
}

TEST_CASE("y-variables from x") {
    const ExchangeMatrix b = build_exchange_matrix(2);
    const auto ones = y_from_x(ClusterSeed<Rational>{std::vector<Rational>(7, Rational(1)), b});
    for (const Rational& y : ones.y) CHECK(y == 1);

    std::vector<Rational> x;
    for (int k = 1; k <= 7; ++k) x.emplace_back(k + 1, 3);
    const auto y = y_from_x(ClusterSeed<Rational>{x, b});
    // column 4 of B: +1 from x2 and x6, -1 from x3 and x5
    CHECK(y.y[3] == x[1] * x[5] / (x[2] * x[4]));

    x[0] = 0;
    CHECK_THROWS_AS(y_from_x(ClusterSeed<Rational>{x, b}), DegenerateSeed);
}

TEST_CASE("y-mutation at 4 of the all-ones y") {
    const auto [y, b] = mutate_y(std::vector<Rational>(7, Rational(1)), build_exchange_matrix(2), 4);
    // b42 = -1, b43 = +1, b45 = +1, b46 = -1:
    // y_i (1 + 1/y4)^(-b4i) for b4i > 0, y_i (1 + y4)^(-b4i) for b4i < 0
    CHECK(y[3] == 1);
    CHECK(y[1] == 2);
    CHECK(y[2] == Rational(1, 2));
    CHECK(y[4] == Rational(1, 2));
    CHECK(y[5] == 2);
    CHECK(y[0] == 1);
    CHECK(y[6] == 1);
    CHECK(b == mutate(build_exchange_matrix(2), 4));
}

TEST_CASE("y-mutation is an involution and rejects 0 and -1") {
    std::mt19937_64 rng(15);
    const ExchangeMatrix b = build_exchange_matrix(2);
    const YSeed<Rational> s{random_rationals(7, rng), b};
    for (int k = 1; k <= 7; ++k) CHECK(mutate(mutate(s, k), k) == s);

    std::vector<Rational> y(7, Rational(1));
    y[2] = -1;
    CHECK_THROWS_AS(mutate_y(y, b, 3), SingularY);
    y[2] = 0;
    try {
        (void)mutate_y(y, b, 3);
        FAIL("expected SingularY");
    } catch (const SingularY& e) {
        CHECK(e.index() == 3);
    }
}

TEST_CASE("y of a mutated seed is the mutated y") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 50; ++trial) {
        const ClusterSeed<Rational> s{random_rationals(7, rng), build_exchange_matrix(2)};
        for (int k = 1; k <= 7; ++k) CHECK(y_from_x(mutate(s, k)) == mutate(y_from_x(s), k));
    }
}

TEST_CASE("permutation of subscripts") {
    std::vector<Rational> x;
    for (int k = 1; k <= 7; ++k) x.emplace_back(k);
    const ClusterSeed<Rational> s{x, build_exchange_matrix(2)};
    const auto p = permute(s, 3, 5);
    CHECK(p.at(3) == 5);
    CHECK(p.at(5) == 3);
    for (int k : {1, 2, 4, 6, 7}) CHECK(p.at(k) == k);
    CHECK(p.b(3, 4) == s.b(5, 4));
    CHECK(p.b.is_skew_symmetric());
    CHECK(permute(p, 3, 5) == s);
    CHECK_THROWS_AS(permute(s, 0, 2), InvalidArgument);
}

TEST_CASE("operator words parse, print and act right to left") {
    const OpWord w = parse_op_word("s3,5 s2,5 m4");
    REQUIRE(w.size() == 3);
    CHECK(w[0] == SeedOp::s(3, 5));
    CHECK(w[2] == SeedOp::mu(4));
    CHECK(to_string(w) == "s3,5 s2,5 m4");
    CHECK_THROWS_AS(parse_op_word("q3"), ParseError);
    CHECK_THROWS_AS(parse_op_word("s3"), ParseError);

    std::mt19937_64 rng(17);
    const ClusterSeed<Rational> s{random_rationals(7, rng), build_exchange_matrix(2)};
    CHECK(apply_word(s, parse_op_word("s2,3 m4")) == permute(mutate(s, 4), 2, 3));
    CHECK(apply_word(s, power(parse_op_word("m4"), 2)) == s);
}
