#pragma once

// Shared helpers for the test binaries: random word generation and an
// exception matcher that checks the message text.

#include <functional>
#include <random>
#include <string>

#include "cassonlin/braid.hpp"
#include "doctest.h"

namespace test_helpers {

template <typename Error, typename Fn>
void expect_throw_containing(Fn&& fn, const std::string& needle) {
    bool threw = false;
    try {
        fn();
    } catch (const Error& e) {
        threw = true;
        CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                      "message was: ", e.what());
    }
    CHECK_MESSAGE(threw, "expected an exception mentioning '", needle, "'");
}

inline cassonlin::BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    cassonlin::BraidWord w;
    w.strands = strands;
    for (int i = 0; i < length; ++i) w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    return w;
}

// Rejection-sample until the closure is a knot.  The induced permutation is a
// product of `length` transpositions, so a full cycle needs
// length == strands - 1 (mod 2); bump the length when the parities clash.
inline cassonlin::BraidWord random_knot_word(std::mt19937_64& rng, int strands, int length) {
    if ((length + strands) % 2 == 0) ++length;
    for (;;) {
        cassonlin::BraidWord w = random_word(rng, strands, length);
        if (cassonlin::is_knot(w)) return w;
    }
}

}  // namespace test_helpers
