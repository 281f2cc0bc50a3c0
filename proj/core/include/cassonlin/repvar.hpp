#pragma once

// The braid action on tuples of trace-free SU(2) elements.
//
// A configuration is an n-tuple X = (X_1,...,X_n) of pure unit quaternions.
// The generator sigma_i acts by
//
//   sigma_i:      (X_i, X_{i+1}) -> (X_i X_{i+1} X_i^-1, X_i)
//   sigma_i^-1:   (X_i, X_{i+1}) -> (X_{i+1}, X_{i+1}^-1 X_i X_{i+1})
//
// fixing the other entries.  The action preserves the product X_1...X_n and
// commutes with simultaneous conjugation, so fixed configurations of a knot
// word are exactly the trace-free representations of the knot group.

#include <Eigen/Dense>

#include <vector>

#include "cassonlin/braid.hpp"
#include "cassonlin/su2.hpp"

namespace cassonlin {

struct Configuration {
    std::vector<Vec3> points;

    int size() const { return static_cast<int>(points.size()); }
    Vec3& operator[](int i) { return points[i]; }
    const Vec3& operator[](int i) const { return points[i]; }
};

// Max over slots of the Euclidean distance between entries.
double config_distance(const Configuration& a, const Configuration& b);

// One letter of the action; letter = +-i with 1 <= i < X.size().
Configuration apply_generator(int letter, Configuration X);

// Letter-by-letter composition, left to right.  Entries are renormalized
// along the way so norms never drift.
Configuration apply_braid(const BraidWord& b, Configuration X);

// X_1 ... X_n as a unit quaternion.
Quat product(const Configuration& X);

// True iff all points lie on one axis (+-X_1 within tol), i.e. the
// representation is reducible (binary cyclic).
bool is_reducible(const Configuration& X, double tol = 1e-6);

// Conjugate X to the canonical slice: the anchor point (X_2 when n = 2,
// X_1 otherwise) goes to e3, then a rotation about e3 puts the first point
// not (anti)parallel to the anchor into the xz-half-plane with x >= 0.
// Throws std::invalid_argument on reducible input.
Configuration gauge_fix(const Configuration& X);

// Conjugation invariants: traces of X_i X_j for i < j in lexicographic
// order, then the trace of X_1 X_2 X_3 when n >= 3.
std::vector<double> fingerprint(const Configuration& X);

// Orthonormal tangent frame: u_i, v_i span the tangent plane at X_i with
// u_i x v_i = X_i.
struct TangentFrame {
    std::vector<Vec3> u, v;
    static TangentFrame at(const Configuration& X);

    // 3n x 2n matrix whose columns are the frame vectors (u_1, v_1, u_2,...).
    Eigen::MatrixXd basis(const Configuration& X) const;
};

// Derivative of the braid action at X in ambient coordinates (3n x 3n),
// exact chain rule through the conjugation formulas.
Eigen::MatrixXd braid_jacobian_ambient(const BraidWord& b, const Configuration& X);

// F^T * J_ambient * F: the derivative in frame coordinates (2n x 2n).  At a
// fixed configuration this is the return map on the tangent space; orbit
// vectors are then eigenvectors with eigenvalue 1.
Eigen::MatrixXd braid_jacobian(const BraidWord& b, const Configuration& X,
                               const TangentFrame& F);

// The infinitesimal conjugation direction (xi x X_1, ..., xi x X_n),
// stacked into a 3n-vector.
Eigen::VectorXd orbit_vector(const Configuration& X, const Vec3& xi);

}  // namespace cassonlin
