#include "clustervol/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace clustervol {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) tokens.push_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool parse_int(std::string_view token, int& out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc() && ptr == end && !token.empty();
}

}  // namespace

int closure_components(const BraidWord& word) {
    const int n = word.strands;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Strand positions: each sigma_k exchanges positions k and k+1.
    for (const BraidLetter& l : word.letters) std::swap(perm[l.generator - 1], perm[l.generator]);
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return cycles;
}

BraidWord parse_braid(std::string_view text, ClosureCheck check) {
    BraidWord word;
    int explicit_strands = 0;
    std::string_view body = text;
    int token_offset = 0;

    const std::size_t semi = text.find(';');
    if (semi != std::string_view::npos) {
        auto head = split_ws(text.substr(0, semi));
        if (head.size() != 1 || head[0].substr(0, 2) != "n=" ||
            !parse_int(head[0].substr(2), explicit_strands))
            throw ParseError(1, "malformed strand prefix, expected \"n=<int>;\"");
        if (explicit_strands < 1) throw ParseError(1, "strand count must be positive");
        body = text.substr(semi + 1);
        token_offset = 1;
    }

    int max_gen = 0;
    const auto tokens = split_ws(body);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const int position = static_cast<int>(t) + 1 + token_offset;
        int v = 0;
        if (!parse_int(tokens[t], v))
            throw ParseError(position, "token " + std::to_string(position) + " (\"" +
                                           std::string(tokens[t]) + "\") is not an integer");
        if (v == 0)
            throw ParseError(position, "token " + std::to_string(position) +
                                           " is 0, which is not a braid generator");
        const int gen = v < 0 ? -v : v;
        if (explicit_strands && gen >= explicit_strands)
            throw ParseError(position, "token " + std::to_string(position) + ": generator " +
                                           std::to_string(gen) + " needs more than " +
                                           std::to_string(explicit_strands) + " strands");
        max_gen = std::max(max_gen, gen);
        word.letters.push_back({gen, v > 0 ? 1 : -1});
    }
    word.strands = explicit_strands ? explicit_strands : max_gen + 1;

    if (check == ClosureCheck::require_knot) {
        const int comps = closure_components(word);
        if (comps != 1)
            throw MultiComponent(comps, "braid closure has " + std::to_string(comps) +
                                            " components; only knots are supported");
    }
    return word;
}

std::string to_string(const BraidWord& word) {
    std::ostringstream os;
    os << "n=" << word.strands << ";";
    for (const BraidLetter& l : word.letters) os << ' ' << l.sign * l.generator;
    return os.str();
}

OpWord r_operator_word(int i, int sign) {
    if (sign > 0)
        return {SeedOp::s(3 * i, 3 * i + 2),     SeedOp::s(3 * i - 1, 3 * i + 2),
                SeedOp::s(3 * i, 3 * i + 3),     SeedOp::mu(3 * i + 1),
                SeedOp::mu(3 * i - 1),           SeedOp::mu(3 * i + 3),
                SeedOp::mu(3 * i + 1)};
    if (sign < 0)
        return {SeedOp::s(3 * i, 3 * i + 3),     SeedOp::s(3 * i - 1, 3 * i + 2),
                SeedOp::s(3 * i, 3 * i + 2),     SeedOp::mu(3 * i + 1),
                SeedOp::mu(3 * i + 2),           SeedOp::mu(3 * i),
                SeedOp::mu(3 * i + 1)};
    throw InvalidArgument("braid sign must be +1 or -1");
}

OpWord parse_op_word(std::string_view text) {
    OpWord word;
    const auto tokens = split_ws(text);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const std::string_view tok = tokens[t];
        const int position = static_cast<int>(t) + 1;
        if (tok.size() < 2) throw ParseError(position, "malformed operator token");
        std::string_view rest = tok.substr(1);
        if (tok[0] == 'm') {
            int k = 0;
            if (!parse_int(rest, k)) throw ParseError(position, "malformed mutation index");
            word.push_back(SeedOp::mu(k));
        } else if (tok[0] == 's') {
            const std::size_t comma = rest.find(',');
            int i = 0, j = 0;
            if (comma == std::string_view::npos || !parse_int(rest.substr(0, comma), i) ||
                !parse_int(rest.substr(comma + 1), j))
                throw ParseError(position, "malformed transposition, expected s<i>,<j>");
            word.push_back(SeedOp::s(i, j));
        } else {
            throw ParseError(position, "unknown operator letter");
        }
    }
    return word;
}

std::string to_string(const OpWord& word) {
    std::ostringstream os;
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (t) os << ' ';
        if (word[t].kind == SeedOp::Kind::mutation)
            os << 'm' << word[t].a;
        else
            os << 's' << word[t].a << ',' << word[t].b;
    }
    return os.str();
}

}  // namespace clustervol
