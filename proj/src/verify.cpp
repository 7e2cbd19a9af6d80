#include "clustervol/verify.hpp"

#include <algorithm>

namespace clustervol {

namespace {

using Seed = ClusterSeed<Rational>;

int strands_of(const RationalVector& x) { return (static_cast<int>(x.size()) - 1) / 3; }

RationalVector head(const RationalVector& x, int size) { return {x.begin(), x.begin() + size}; }

void append(RationalVector& out, const RationalVector& v) { out.insert(out.end(), v.begin(), v.end()); }

RationalVector ones(int size) { return RationalVector(size, Rational(1)); }

RationalVector flatten(const ExchangeMatrix& b) {
    RationalVector out;
    for (const auto& row : b.rows())
        for (int v : row) out.emplace_back(v);
    return out;
}

Seed seed_of(const RationalVector& x) { return {x, build_exchange_matrix(strands_of(x))}; }

RationalVector seed_values(const Seed& s) {
    RationalVector out = s.x;
    append(out, flatten(s.b));
    return out;
}

// Closed-form R with an optional sign flip in the third window entry of R^{+1}.
RationalVector closed_R(const RationalVector& x, int i, int eps, const VerifyOptions& opt) {
    if (!(opt.corrupt_closed_form && eps > 0)) return apply_R_closed(x, i, eps);
    RationalVector out = apply_R_closed(x, i, eps);
    const int o = 3 * i - 3;
    const Rational &x1 = x[o], &x2 = x[o + 1], &x3 = x[o + 2], &x4 = x[o + 3], &x5 = x[o + 4],
                   &x6 = x[o + 5];
    out[o + 2] = (x1 * x3 * x5 + x3 * x4 * x5 - x1 * x2 * x6) / (x2 * x4);
    return out;
}

RationalVector comp_R(const RationalVector& x, int i, int eps) {
    return apply_R_comp(seed_of(x), i, eps).x;
}

RationalVector product_of(const RationalVector& v, std::initializer_list<int> indices) {
    Rational p(1);
    for (int k : indices) p *= v[k - 1];
    return {p};
}

IdentityCase make(std::string name, std::string description, int arity, RationalMap lhs,
                  RationalMap rhs) {
    return {std::move(name), std::move(description), arity, std::move(lhs), std::move(rhs)};
}

}  // namespace

Rational random_positive_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, 100);
    const int num = d(rng);
    const int den = d(rng);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RationalVector random_positive_point(int size, std::mt19937_64& rng) {
    RationalVector v;
    v.reserve(size);
    for (int k = 0; k < size; ++k) v.push_back(random_positive_rational(rng));
    return v;
}

IdentityResult check_identity(const IdentityCase& c, int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidArgument("trials must be at least 1");
    IdentityResult result{c.name, true, 0, std::nullopt};
    std::mt19937_64 rng(seed);
    for (int t = 1; t <= trials; ++t) {
        const RationalVector point = random_positive_point(c.arity, rng);
        result.trials = t;
        Witness w{t, point, 0, {}, {}, {}};
        try {
            const RationalVector lhs = c.lhs(point);
            const RationalVector rhs = c.rhs(point);
            if (lhs.size() != rhs.size()) {
                w.lhs = std::to_string(lhs.size()) + " components";
                w.rhs = std::to_string(rhs.size()) + " components";
            } else {
                const auto diff = std::mismatch(lhs.begin(), lhs.end(), rhs.begin());
                if (diff.first == lhs.end()) continue;
                w.component = static_cast<int>(diff.first - lhs.begin()) + 1;
                w.lhs = diff.first->get_str();
                w.rhs = diff.second->get_str();
            }
        } catch (const Error& e) {
            w.error = e.what();
        }
        result.passed = false;
        result.witness = std::move(w);
        return result;
    }
    return result;
}

RationalVector braid_relation_image(const RationalVector& v) {
    if (v.size() != 10) throw InvalidArgument("braid relation image needs 10 variables");
    const Rational &x1 = v[0], &x2 = v[1], &x3 = v[2], &x4 = v[3], &x5 = v[4], &x6 = v[5],
                   &x7 = v[6], &x8 = v[7], &x9 = v[8], &x10 = v[9];
    RationalVector out(10);
    out[0] = x1;
    out[1] = x8;
    out[2] = (x1 * x2 * x4 * x6 * x8 + x1 * x3 * x5 * x7 * x8 + x3 * x4 * x5 * x7 * x8 +
              x1 * x2 * x6 * x7 * x8 + x1 * x2 * x4 * x5 * x9) /
             (x2 * x4 * x5 * x7);
    out[3] = (x1 * x2 * x4 * x6 * x7 * x8 + x1 * x3 * x5 * x7 * x7 * x8 +
              x3 * x4 * x5 * x7 * x7 * x8 + x1 * x2 * x6 * x7 * x7 * x8 +
              x1 * x2 * x4 * x6 * x8 * x10 + x1 * x3 * x5 * x7 * x8 * x10 +
              x3 * x4 * x5 * x7 * x8 * x10 + x1 * x2 * x6 * x7 * x8 * x10 +
              x1 * x2 * x4 * x5 * x9 * x10) /
             (x2 * x4 * x5 * x7 * x9);
    out[4] = (x6 * x7 * x8 + x6 * x8 * x10 + x5 * x9 * x10) / (x7 * x9);
    out[5] = (x1 * x3 * x5 + x3 * x4 * x5 + x1 * x2 * x6) / (x2 * x4);
    out[6] = (x1 * x3 * x4 * x6 * x7 * x8 + x3 * x4 * x4 * x6 * x7 * x8 +
              x1 * x3 * x4 * x6 * x8 * x10 + x3 * x4 * x4 * x6 * x8 * x10 +
              x1 * x3 * x4 * x5 * x9 * x10 + x3 * x4 * x4 * x5 * x9 * x10 +
              x1 * x3 * x5 * x7 * x9 * x10 + x3 * x4 * x5 * x7 * x9 * x10 +
              x1 * x2 * x6 * x7 * x9 * x10) /
             (x2 * x4 * x6 * x7 * x9);
    out[7] = (x3 * x4 * x6 * x7 * x8 + x3 * x4 * x6 * x8 * x10 + x3 * x4 * x5 * x9 * x10 +
              x3 * x5 * x7 * x9 * x10 + x2 * x6 * x7 * x9 * x10) /
             (x4 * x6 * x7 * x9);
    out[8] = x3;
    out[9] = x10;
    return out;
}

std::vector<IdentityCase> identity_cases(VerifyOptions opt) {
    auto R = [opt](const RationalVector& x, int i, int eps) { return closed_R(x, i, eps, opt); };
    const auto seed_identity = [](const RationalVector& x) { return seed_values(seed_of(x)); };
    const auto word_action = [](std::string_view text) {
        return [word = parse_op_word(text)](const RationalVector& x) {
            return seed_values(apply_word(seed_of(x), word));
        };
    };

    std::vector<IdentityCase> cases;

    cases.push_back(make(
        "braid-relation", "R1 R2 R1 = R2 R1 R2 at n=3, for R and for R^-1", 10,
        [R](const RationalVector& x) {
            RationalVector out = R(R(R(x, 1, 1), 2, 1), 1, 1);
            append(out, R(R(R(x, 1, -1), 2, -1), 1, -1));
            return out;
        },
        [R](const RationalVector& x) {
            RationalVector out = R(R(R(x, 2, 1), 1, 1), 2, 1);
            append(out, R(R(R(x, 2, -1), 1, -1), 2, -1));
            return out;
        }));

    cases.push_back(make(
        "braid-relation-explicit", "R1 R2 R1 equals the explicit ten-component image", 10,
        [R](const RationalVector& x) { return R(R(R(x, 1, 1), 2, 1), 1, 1); },
        braid_relation_image));

    cases.push_back(make(
        "far-commutativity", "R1^a R3^b = R3^b R1^a at n=4 for all signs", 13,
        [R](const RationalVector& x) {
            RationalVector out;
            for (int a : {1, -1})
                for (int b : {1, -1}) append(out, R(R(x, 3, b), 1, a));
            return out;
        },
        [R](const RationalVector& x) {
            RationalVector out;
            for (int a : {1, -1})
                for (int b : {1, -1}) append(out, R(R(x, 1, a), 3, b));
            return out;
        }));

    cases.push_back(make(
        "r-inverse", "R R^-1 = R^-1 R = id, closed and compositional, n=3", 10,
        [R](const RationalVector& x) {
            RationalVector out;
            for (int i : {1, 2}) {
                append(out, R(R(x, i, 1), i, -1));
                append(out, R(R(x, i, -1), i, 1));
                append(out, comp_R(comp_R(x, i, 1), i, -1));
                append(out, comp_R(comp_R(x, i, -1), i, 1));
            }
            return out;
        },
        [](const RationalVector& x) {
            RationalVector out;
            for (int k = 0; k < 8; ++k) append(out, x);
            return out;
        }));

    cases.push_back(make(
        "closed-vs-comp", "closed-form R equals the mutation word, n in {2,3}, both signs", 10,
        [R](const RationalVector& x) {
            RationalVector out;
            for (int eps : {1, -1}) {
                append(out, R(head(x, 7), 1, eps));
                for (int i : {1, 2}) append(out, R(x, i, eps));
            }
            return out;
        },
        [](const RationalVector& x) {
            RationalVector out;
            for (int eps : {1, -1}) {
                append(out, comp_R(head(x, 7), 1, eps));
                for (int i : {1, 2}) append(out, comp_R(x, i, eps));
            }
            return out;
        }));

    cases.push_back(make("r-jones", "s2,5 s3,6 m2 m6 m4 m2 m6 equals the R word", 7,
                         word_action("s2,5 s3,6 m2 m6 m4 m2 m6"),
                         word_action(to_string(r_operator_word(1, 1)))));

    cases.push_back(make("half-periodicity-35", "s3,5 (m3 m5 m4)^3 = id", 7,
                         word_action("s3,5 m3 m5 m4 m3 m5 m4 m3 m5 m4"), seed_identity));

    cases.push_back(make("half-periodicity-26", "s2,6 (m2 m6 m4)^3 = id", 7,
                         word_action("s2,6 m2 m6 m4 m2 m6 m4 m2 m6 m4"), seed_identity));

    cases.push_back(make(
        "b-invariance", "the R words return the exchange matrix unchanged, n in {2,3}", 10,
        [](const RationalVector& x) {
            RationalVector out;
            for (int eps : {1, -1}) {
                append(out, flatten(apply_word(seed_of(head(x, 7)), r_operator_word(1, eps)).b));
                for (int i : {1, 2})
                    append(out, flatten(apply_word(seed_of(x), r_operator_word(i, eps)).b));
            }
            return out;
        },
        [](const RationalVector&) {
            RationalVector out;
            for (int sign_count = 0; sign_count < 2; ++sign_count) {
                append(out, flatten(build_exchange_matrix(2)));
                append(out, flatten(build_exchange_matrix(3)));
                append(out, flatten(build_exchange_matrix(3)));
            }
            return out;
        }));

    cases.push_back(make(
        "axis-invariance", "y_{3i-2} y_{3i+1} y_{3i+4} is invariant under R_i^{+-1} on y, n=3", 10,
        [](const RationalVector& y) {
            RationalVector out;
            for (int i : {1, 2})
                for (int eps : {1, -1}) {
                    const int o = 3 * i - 3;
                    append(out, product_of(apply_R_y(y, i, eps), {o + 1, o + 4, o + 7}));
                }
            return out;
        },
        [](const RationalVector& y) {
            RationalVector out;
            for (int i : {1, 2}) {
                const int o = 3 * i - 3;
                append(out, product_of(y, {o + 1, o + 4, o + 7}));
                append(out, product_of(y, {o + 1, o + 4, o + 7}));
            }
            return out;
        }));

    cases.push_back(make(
        "completeness", "y_{3i-1} y_{3i} = 1 for y from x, before and after each R, n=3", 10,
        [R](const RationalVector& x) {
            RationalVector out;
            std::vector<RationalVector> points{x};
            for (int i : {1, 2})
                for (int eps : {1, -1}) points.push_back(R(x, i, eps));
            for (const RationalVector& p : points) {
                const RationalVector y = y_from_x(seed_of(p)).y;
                for (int i = 1; i <= 3; ++i) append(out, product_of(y, {3 * i - 1, 3 * i}));
            }
            return out;
        },
        [](const RationalVector&) { return ones(15); }));

    cases.push_back(make(
        "commuting-square", "y(mu_k(x)) = mu_k(y(x)) for every k, n in {2,3}", 10,
        [](const RationalVector& x) {
            RationalVector out;
            for (const Seed& s : {seed_of(head(x, 7)), seed_of(x)})
                for (int k = 1; k <= s.size(); ++k) append(out, y_from_x(mutate(s, k)).y);
            return out;
        },
        [](const RationalVector& x) {
            RationalVector out;
            for (const Seed& s : {seed_of(head(x, 7)), seed_of(x)})
                for (int k = 1; k <= s.size(); ++k) append(out, mutate(y_from_x(s), k).y);
            return out;
        }));

    cases.push_back(make(
        "y-compat", "y(R(x)) = R(y(x)), n in {2,3}, both signs", 10,
        [R](const RationalVector& x) {
            RationalVector out;
            for (int eps : {1, -1}) {
                append(out, y_from_x(seed_of(R(head(x, 7), 1, eps))).y);
                for (int i : {1, 2}) append(out, y_from_x(seed_of(R(x, i, eps))).y);
            }
            return out;
        },
        [](const RationalVector& x) {
            RationalVector out;
            for (int eps : {1, -1}) {
                append(out, apply_R_y(y_from_x(seed_of(head(x, 7))).y, 1, eps));
                for (int i : {1, 2}) append(out, apply_R_y(y_from_x(seed_of(x)).y, i, eps));
            }
            return out;
        }));

    cases.push_back(make(
        "y-r-inverse", "R^-1 R = R R^-1 = id on y, n=2", 7,
        [](const RationalVector& y) {
            RationalVector out = apply_R_y(apply_R_y(y, 1, 1), 1, -1);
            append(out, apply_R_y(apply_R_y(y, 1, -1), 1, 1));
            return out;
        },
        [](const RationalVector& y) {
            RationalVector out = y;
            append(out, y);
            return out;
        }));

    cases.push_back(make(
        "homogeneity",
        "R(lambda x) = lambda R(x), and the figure-eight residual scales alike, n=3", 11,
        [R](const RationalVector& v) {
            const Rational lambda = v[0];
            RationalVector x(v.begin() + 1, v.end());
            for (Rational& e : x) e *= lambda;
            RationalVector out;
            for (int i : {1, 2})
                for (int eps : {1, -1}) append(out, R(x, i, eps));
            append(out, periodicity_residual(parse_braid("1 -2 1 -2"), x));
            return out;
        },
        [R](const RationalVector& v) {
            const Rational lambda = v[0];
            const RationalVector x(v.begin() + 1, v.end());
            RationalVector out;
            for (int i : {1, 2})
                for (int eps : {1, -1}) append(out, R(x, i, eps));
            append(out, periodicity_residual(parse_braid("1 -2 1 -2"), x));
            for (Rational& e : out) e *= lambda;
            return out;
        }));

    cases.push_back(make(
        "mutation-involution", "mu_k mu_k = id on x and B for every k, n in {2,3}", 10,
        [](const RationalVector& x) {
            RationalVector out;
            for (const Seed& s : {seed_of(head(x, 7)), seed_of(x)})
                for (int k = 1; k <= s.size(); ++k) append(out, seed_values(mutate(mutate(s, k), k)));
            return out;
        },
        [](const RationalVector& x) {
            RationalVector out;
            for (const Seed& s : {seed_of(head(x, 7)), seed_of(x)})
                for (int k = 1; k <= s.size(); ++k) append(out, seed_values(s));
            return out;
        }));

    cases.push_back(make(
        "mutation-commutation", "mu_j mu_k = mu_k mu_j whenever b_jk = 0, n=2", 7,
        [](const RationalVector& x) {
            const Seed s = seed_of(x);
            RationalVector out;
            for (int j = 1; j <= 7; ++j)
                for (int k = j + 1; k <= 7; ++k)
                    if (s.b(j, k) == 0) append(out, seed_values(mutate(mutate(s, k), j)));
            return out;
        },
        [](const RationalVector& x) {
            const Seed s = seed_of(x);
            RationalVector out;
            for (int j = 1; j <= 7; ++j)
                for (int k = j + 1; k <= 7; ++k)
                    if (s.b(j, k) == 0) append(out, seed_values(mutate(mutate(s, j), k)));
            return out;
        }));

    return cases;
}

std::optional<IdentityCase> find_identity_case(const std::string& name, VerifyOptions options) {
    for (IdentityCase& c : identity_cases(options))
        if (c.name == name) return std::move(c);
    return std::nullopt;
}

}  // namespace clustervol
