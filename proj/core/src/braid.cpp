#include "cassonlin/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cassonlin {

namespace {

void check_letters(const BraidWord& b) {
    if (b.strands < 2)
        throw BraidParseError("strand count must be at least 2, got " +
                              std::to_string(b.strands));
    for (int e : b.letters) {
        if (e == 0) throw BraidParseError("letter 0 is not a generator");
        if (std::abs(e) >= b.strands)
            throw BraidParseError("letter " + std::to_string(e) + " out of range for " +
                                  std::to_string(b.strands) + " strands");
    }
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw BraidParseError("expected \"<strands>: letters\", missing ':'");

    BraidWord b;
    {
        std::string head(text.substr(0, colon));
        std::istringstream in(head);
        if (!(in >> b.strands))
            throw BraidParseError("bad strand count '" + head + "'");
        std::string rest;
        if (in >> rest) throw BraidParseError("unexpected token '" + rest + "' before ':'");
    }

    std::istringstream in{std::string(text.substr(colon + 1))};
    std::string tok;
    while (in >> tok) {
        int e = 0;
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        auto [p, ec] = std::from_chars(first, last, e);
        if (ec != std::errc() || p != last)
            throw BraidParseError("bad letter token '" + tok + "'");
        b.letters.push_back(e);
    }
    check_letters(b);
    return b;
}

std::string to_text(const BraidWord& b) {
    std::ostringstream out;
    out << b.strands << ":";
    for (int e : b.letters) out << ' ' << e;
    return out.str();
}

bool Permutation::is_full_cycle() const {
    const int n = static_cast<int>(images.size());
    if (n == 0) return false;
    int at = 1;
    for (int steps = 0; steps < n; ++steps) {
        at = images[at - 1];
        if (at == 1) return steps + 1 == n;
    }
    return false;
}

Permutation permutation(const BraidWord& b) {
    check_letters(b);
    // position[p] = strand currently at position p (0-based).
    std::vector<int> position(b.strands);
    std::iota(position.begin(), position.end(), 1);
    for (int e : b.letters) {
        const int i = std::abs(e) - 1;
        std::swap(position[i], position[i + 1]);
    }
    Permutation perm;
    perm.images.resize(b.strands);
    for (int p = 0; p < b.strands; ++p) perm.images[position[p] - 1] = p + 1;
    return perm;
}

bool is_knot(const BraidWord& b) { return permutation(b).is_full_cycle(); }

int exponent_sum(const BraidWord& b) {
    int s = 0;
    for (int e : b.letters) s += (e > 0) ? 1 : -1;
    return s;
}

BraidWord free_reduce(const BraidWord& b) {
    BraidWord r;
    r.strands = b.strands;
    for (int e : b.letters) {
        if (!r.letters.empty() && r.letters.back() == -e)
            r.letters.pop_back();
        else
            r.letters.push_back(e);
    }
    return r;
}

BraidWord inverse(const BraidWord& b) {
    BraidWord r;
    r.strands = b.strands;
    r.letters.reserve(b.letters.size());
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

BraidWord mirror(const BraidWord& b) {
    BraidWord r = b;
    for (int& e : r.letters) e = -e;
    return r;
}

BraidWord markov_conjugate(const BraidWord& b, const BraidWord& xi) {
    if (xi.strands != b.strands)
        throw std::invalid_argument("conjugator must live in the same braid group");
    check_letters(b);
    check_letters(xi);
    BraidWord r = inverse(xi);
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    r.letters.insert(r.letters.end(), xi.letters.begin(), xi.letters.end());
    return r;
}

BraidWord markov_stabilize(const BraidWord& b, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +-1");
    BraidWord r;
    r.strands = b.strands + 1;
    r.letters.reserve(b.letters.size() + 1);
    r.letters.push_back(sign * b.strands);
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord markov_destabilize(const BraidWord& b) {
    const BraidWord red = free_reduce(b);
    const int top = red.strands - 1;
    int count = 0, at = -1;
    for (int k = 0; k < static_cast<int>(red.letters.size()); ++k) {
        if (std::abs(red.letters[k]) == top) {
            ++count;
            at = k;
        }
    }
    if (count != 1)
        throw std::invalid_argument("not destabilizable: generator " + std::to_string(top) +
                                    " occurs " + std::to_string(count) + " times");
    BraidWord r;
    r.strands = red.strands - 1;
    if (r.strands < 2) throw std::invalid_argument("not destabilizable: would leave one strand");
    r.letters = red.letters;
    r.letters.erase(r.letters.begin() + at);
    return r;
}

}  // namespace cassonlin
