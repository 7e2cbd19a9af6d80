// Cluster seeds, exchange matrices, x- and y-mutations and subscript permutations.
//
// All indices in the public interface are 1-based. Values are immutable: every
// operation returns a new seed. The scalar type S is any field from scalar.hpp.
#pragma once

#include "clustervol/errors.hpp"
#include "clustervol/scalar.hpp"

#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clustervol {

/// Skew-symmetric integer matrix, 1-based access.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;

    /// Zero matrix of the given size.
    explicit ExchangeMatrix(int size)
        : size_(size), b_(static_cast<std::size_t>(size) * size, 0) {
        if (size < 1) throw InvalidArgument("exchange matrix size must be positive");
    }

    /// Builds from rows; throws InvalidArgument unless square and skew-symmetric.
    static ExchangeMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        ExchangeMatrix m(static_cast<int>(rows.size()));
        for (int i = 1; i <= m.size_; ++i) {
            const auto& row = rows[i - 1];
            if (static_cast<int>(row.size()) != m.size_)
                throw InvalidArgument("exchange matrix must be square");
            for (int j = 1; j <= m.size_; ++j) m.ref(i, j) = row[j - 1];
        }
        if (!m.is_skew_symmetric())
            throw InvalidArgument("exchange matrix must be skew-symmetric");
        return m;
    }

    int size() const noexcept { return size_; }

    int operator()(int i, int j) const { return b_[index(i, j)]; }

    /// Sets b[i][j] = v and b[j][i] = -v.
    void set_pair(int i, int j, int v) {
        ref(i, j) = v;
        ref(j, i) = -v;
    }

    bool is_skew_symmetric() const {
        for (int i = 1; i <= size_; ++i)
            for (int j = i; j <= size_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(size_, std::vector<int>(size_));
        for (int i = 1; i <= size_; ++i)
            for (int j = 1; j <= size_; ++j) out[i - 1][j - 1] = (*this)(i, j);
        return out;
    }

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

    int& ref(int i, int j) { return b_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || j < 1 || i > size_ || j > size_)
            throw InvalidArgument("exchange matrix index out of range");
        return static_cast<std::size_t>(i - 1) * size_ + (j - 1);
    }

    int size_ = 0;
    std::vector<int> b_;
};

/// The (3n+1)x(3n+1) exchange matrix of the n-strand quiver.
///
/// Block j = 1..n contributes the arrows 3j-2 -> 3j-1, 3j -> 3j-2, 3j-1 -> 3j+1
/// and 3j+1 -> 3j; n = 2 gives the 7x7 matrix of the single crossing quiver.
inline ExchangeMatrix build_exchange_matrix(int strands) {
    if (strands < 2) throw InvalidArgument("invalid strand count: need n >= 2");
    ExchangeMatrix b(3 * strands + 1);
    for (int j = 1; j <= strands; ++j) {
        b.set_pair(3 * j - 2, 3 * j - 1, 1);
        b.set_pair(3 * j - 2, 3 * j, -1);
        b.set_pair(3 * j - 1, 3 * j + 1, 1);
        b.set_pair(3 * j, 3 * j + 1, -1);
    }
    return b;
}

/// Matrix mutation at k.
inline ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
    const int n = b.size();
    if (k < 1 || k > n) throw InvalidArgument("mutation index out of range");
    ExchangeMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == k || j == k) {
                out.ref(i, j) = -b(i, j);
            } else {
                out.ref(i, j) =
                    b(i, j) + (std::abs(b(i, k)) * b(k, j) + b(i, k) * std::abs(b(k, j))) / 2;
            }
        }
    }
    return out;
}

/// Swaps rows i, j and columns i, j.
inline ExchangeMatrix permute(const ExchangeMatrix& b, int i, int j) {
    const int n = b.size();
    if (i < 1 || j < 1 || i > n || j > n) throw InvalidArgument("permutation index out of range");
    auto relabel = [&](int a) { return a == i ? j : (a == j ? i : a); };
    ExchangeMatrix out(n);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) out.ref(r, c) = b(relabel(r), relabel(c));
    return out;
}

template <class S>
struct ClusterSeed {
    std::vector<S> x;
    ExchangeMatrix b;

    const S& at(int i) const { return x.at(static_cast<std::size_t>(i - 1)); }
    int size() const { return static_cast<int>(x.size()); }

    friend bool operator==(const ClusterSeed&, const ClusterSeed&) = default;
};

/// y-variables together with the exchange matrix they mutate with.
template <class S>
struct YSeed {
    std::vector<S> y;
    ExchangeMatrix b;

    friend bool operator==(const YSeed&, const YSeed&) = default;
};

namespace detail {

inline void check_index(int k, int n) {
    if (k < 1 || k > n) throw InvalidArgument("index " + std::to_string(k) + " out of range");
}

}  // namespace detail

/// x-mutation at k. Throws DegenerateSeed when x_k = 0.
template <class S>
ClusterSeed<S> mutate(const ClusterSeed<S>& seed, int k) {
    const int n = seed.size();
    detail::check_index(k, n);
    if (seed.b.size() != n) throw InvalidArgument("seed and exchange matrix sizes differ");
    const S& xk = seed.at(k);
    if (is_zero(xk))
        throw DegenerateSeed(k, "division by zero: x_" + std::to_string(k) + " = 0 in mutation");
    S incoming(1);
    S outgoing(1);
    for (int j = 1; j <= n; ++j) {
        const int bjk = seed.b(j, k);
        if (bjk > 0) incoming = incoming * pow_int(seed.at(j), bjk);
        if (bjk < 0) outgoing = outgoing * pow_int(seed.at(j), -bjk);
    }
    ClusterSeed<S> out{seed.x, mutate(seed.b, k)};
    out.x[k - 1] = (incoming + outgoing) / xk;
    return out;
}

/// y_j = prod_k x_k^{b_kj}.
template <class S>
YSeed<S> y_from_x(const ClusterSeed<S>& seed) {
    const int n = seed.size();
    for (int k = 1; k <= n; ++k)
        if (is_zero(seed.at(k)))
            throw DegenerateSeed(k, "division by zero: x_" + std::to_string(k) + " = 0 in y-variables");
    YSeed<S> out{std::vector<S>(n, S(1)), seed.b};
    for (int j = 1; j <= n; ++j) {
        S v(1);
        for (int k = 1; k <= n; ++k) {
            const int e = seed.b(k, j);
            if (e != 0) v = v * pow_int(seed.at(k), e);
        }
        out.y[j - 1] = v;
    }
    return out;
}

/// y-mutation at k. Throws SingularY when y_k is 0 or -1.
template <class S>
YSeed<S> mutate(const YSeed<S>& seed, int k) {
    const int n = static_cast<int>(seed.y.size());
    detail::check_index(k, n);
    const S& yk = seed.y[k - 1];
    if (is_zero(yk) || is_zero(S(yk + S(1))))
        throw SingularY(k, "singular y-mutation: y_" + std::to_string(k) + " is 0 or -1");
    const S inv = S(1) / yk;
    const S one_plus_inv = S(1) + inv;
    const S one_plus = S(1) + yk;
    YSeed<S> out{seed.y, mutate(seed.b, k)};
    for (int i = 1; i <= n; ++i) {
        if (i == k) {
            out.y[i - 1] = inv;
            continue;
        }
        const int bki = seed.b(k, i);
        if (bki > 0) out.y[i - 1] = seed.y[i - 1] * pow_int(one_plus_inv, -bki);
        if (bki < 0) out.y[i - 1] = seed.y[i - 1] * pow_int(one_plus, -bki);
    }
    return out;
}

/// Convenience form returning the pair (y~, B~).
template <class S>
std::pair<std::vector<S>, ExchangeMatrix> mutate_y(const std::vector<S>& y, const ExchangeMatrix& b,
                                                   int k) {
    YSeed<S> out = mutate(YSeed<S>{y, b}, k);
    return {std::move(out.y), std::move(out.b)};
}

template <class S>
std::vector<S> permute(std::vector<S> v, int i, int j) {
    const int n = static_cast<int>(v.size());
    detail::check_index(i, n);
    detail::check_index(j, n);
    std::swap(v[i - 1], v[j - 1]);
    return v;
}

template <class S>
ClusterSeed<S> permute(const ClusterSeed<S>& seed, int i, int j) {
    return {permute(seed.x, i, j), permute(seed.b, i, j)};
}

template <class S>
YSeed<S> permute(const YSeed<S>& seed, int i, int j) {
    return {permute(seed.y, i, j), permute(seed.b, i, j)};
}

/// One letter of an operator word: a mutation mu_k or a transposition s_{i,j}.
struct SeedOp {
    enum class Kind { mutation, swap };
    Kind kind;
    int a;
    int b = 0;

    static SeedOp mu(int k) { return {Kind::mutation, k, 0}; }
    static SeedOp s(int i, int j) { return {Kind::swap, i, j}; }

    friend bool operator==(const SeedOp&, const SeedOp&) = default;
};

using OpWord = std::vector<SeedOp>;

/// Parses "s3,5 s2,5 m4" (m = mutation, s = transposition).
OpWord parse_op_word(std::string_view text);

std::string to_string(const OpWord& word);

/// Applies a word as an operator product: the rightmost letter acts first.
template <class Seed>
Seed apply_word(Seed seed, const OpWord& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->kind == SeedOp::Kind::mutation)
            seed = mutate(seed, it->a);
        else
            seed = permute(seed, it->a, it->b);
    }
    return seed;
}

/// Concatenation `lhs rhs` (rhs acts first).
inline OpWord compose(const OpWord& lhs, const OpWord& rhs) {
    OpWord out = lhs;
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

inline OpWord power(const OpWord& w, int times) {
    OpWord out;
    for (int t = 0; t < times; ++t) out = compose(out, w);
    return out;
}

}  // namespace clustervol
