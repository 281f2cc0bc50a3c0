#pragma once

// The pillowcase picture for 2-strand braids.
//
// With X_2 anchored at e3 and X_1 = from_polar(theta_1), a representation
// pair (X, Y) is coded by the angles (theta_1, theta_2) of X_1 and Y_1,
// modulo (theta_1, theta_2) ~ (-theta_1, -theta_2).  The action of sigma_1^q
// has graph {(theta, (q+1) theta)}; its fixed classes for odd q >= 3 sit at
// (2 pi k / q, 2 pi k / q), k = 1..(q-1)/2, each contributing a generator in
// Maslov degree -2k+1, so the graded group has Euler characteristic
// -(q-1)/2.  The left trefoil table (q = -3) has its single generator in
// degree 0.  Other negative q are not tabulated and are rejected.

#include <map>
#include <optional>
#include <vector>

#include "cassonlin/repvar.hpp"

namespace cassonlin {

struct PillowPoint {
    double theta1 = 0.0;  // in (0, pi) for interior points
    double theta2 = 0.0;  // in (-pi, pi]
};

// Distance modulo the pillowcase identification and 2 pi wrap.
double pillow_distance(const PillowPoint& a, const PillowPoint& b);

// Angles of a configuration pair (X, Y) with n = 2: X must be gauge-fixed
// with second point e3, and both X_1 and Y_1 must lie in the xz-plane
// (which apply_braid preserves on the slice).  Returns nullopt when X_1 or
// Y_1 is (anti)parallel to e3, i.e. on the pillowcase boundary.  Throws
// std::invalid_argument when the preconditions fail.
std::optional<PillowPoint> angles(const Configuration& X, const Configuration& Y);

// Fixed classes of sigma_1^q on the pillowcase, exact closed form.
// q must be odd with q >= 1 or q = -3; empty for q = +-1.
std::vector<PillowPoint> torus_fixed_points(int q);

// Maslov index of the k-th fixed class of sigma_1^q, odd q >= 3,
// 1 <= k <= (q-1)/2: equal to -2k+1.
int torus_maslov(int q, int k);

// rank_by_degree: degree -> rank of the graded group.
using GradedGroups = std::map<int, int>;

// Graded groups of sigma_1^q for odd q >= 1 or q = -3.
GradedGroups torus_floer(int q);

// Sum of (-1)^degree * rank.
int euler_char(const GradedGroups& groups);

}  // namespace cassonlin
