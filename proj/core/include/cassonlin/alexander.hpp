#pragma once

// Alexander polynomial of a braid closure via the reduced Burau
// representation, in exact rational arithmetic.
//
// For b in B_n with knot closure,
//
//   Delta(t) * (1 - t^n) = det(I - Burau_red(b)(t)) * (1 - t),
//
// and the quotient is carried out symbolically, so evaluation points where
// 1 - t^n vanishes are fine.  Delta is determined up to a unit +-t^k; this
// module returns the specific representative produced by the quotient and
// reports absolute values at evaluation points, which is all the classical
// cross-checks need (|Delta(-1)| is the knot determinant).

#include <vector>

#include "cassonlin/braid.hpp"
#include "cassonlin/laurent.hpp"

namespace cassonlin {

// (n-1) x (n-1) matrix of Laurent polynomials, row major.
using BurauMatrix = std::vector<std::vector<LaurentPoly>>;

// Reduced Burau matrix of the word (product of generator matrices, left to
// right).
BurauMatrix reduced_burau(const BraidWord& b);

// The representative of the Alexander polynomial described above.
// Requires is_knot(b).
LaurentPoly alexander_polynomial(const BraidWord& b);

// |Delta(t)| at a rational point t != 0.  Requires is_knot(b).
Rational alexander_at(const BraidWord& b, const Rational& t);

}  // namespace cassonlin
