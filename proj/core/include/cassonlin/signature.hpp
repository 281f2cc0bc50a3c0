#pragma once

// Seifert matrix of a braid closure from its Bennequin surface, plus the
// knot signature and determinant derived from the symmetrized matrix, in
// exact integer/rational arithmetic.

#include <vector>

#include "cassonlin/braid.hpp"

namespace cassonlin {

struct SeifertMatrix {
    // entries[r][c] = lk(loop_r, loop_c^+); always small integers here.
    std::vector<std::vector<int>> entries;
    int size() const { return static_cast<int>(entries.size()); }
};

// Seifert matrix of the Bennequin surface of the closure: one disk per
// strand, one band per letter of the freely reduced word, one generating
// loop per pair of consecutive occurrences of the same generator index.
// The word is freely reduced internally; requires is_knot(b).
SeifertMatrix seifert_matrix(const BraidWord& b);

// Signature of V + V^T by exact congruence diagonalization.  Convention:
// signature_of(sigma_1^3) = -2.
int signature_of(const BraidWord& b);

// |det(V + V^T)|, the knot determinant (odd and positive for knots).
long long determinant_of(const BraidWord& b);

// Signature and |det| of an arbitrary symmetric integer matrix; exposed for
// tests.  Pass V + V^T.
int symmetric_signature(const std::vector<std::vector<long long>>& s);
long long symmetric_abs_det(const std::vector<std::vector<long long>>& s);

}  // namespace cassonlin
