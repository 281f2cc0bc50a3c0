#pragma once

// Braid words and Markov moves.
//
// A braid word on n strands is a sequence of nonzero integers e with
// |e| < n; the letter +i is the elementary crossing of strands i and i+1
// (strand i over strand i+1) and -i is its inverse.  Words act and compose
// left to right.  Text form: "<n>: e1 e2 ... ek".

#include <string>
#include <string_view>
#include <vector>

#include "cassonlin/errors.hpp"

namespace cassonlin {

struct BraidWord {
    int strands = 2;
    std::vector<int> letters;
};

BraidWord parse_braid(std::string_view text);
std::string to_text(const BraidWord& b);

// Permutation of {1..n} induced by forgetting crossing signs; images[i-1]
// is the end position of the strand starting at position i.
struct Permutation {
    std::vector<int> images;
    bool is_full_cycle() const;
};

Permutation permutation(const BraidWord& b);

// True iff the closure of b is a knot, i.e. the permutation is an n-cycle.
bool is_knot(const BraidWord& b);

// Sum of letter signs (the writhe of the closure diagram).
int exponent_sum(const BraidWord& b);

// Cancel adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& b);

BraidWord inverse(const BraidWord& b);

// Negate every letter; the closure is the mirror knot.
BraidWord mirror(const BraidWord& b);

// Markov move of type I: xi^-1 b xi, same strand count.  The result is not
// freely reduced.
BraidWord markov_conjugate(const BraidWord& b, const BraidWord& xi);

// Markov move of type II: prepend sigma_n^{sign} and add a strand.
BraidWord markov_stabilize(const BraidWord& b, int sign);

// Inverse of type II.  Requires exactly one occurrence of +-(n-1) in the
// freely reduced word; removes it and drops the strand.
BraidWord markov_destabilize(const BraidWord& b);

}  // namespace cassonlin
