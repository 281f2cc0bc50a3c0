#include "cassonlin/repvar.hpp"

#include <cmath>
#include <stdexcept>

namespace cassonlin {

double config_distance(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) throw std::invalid_argument("configuration sizes differ");
    double d = 0.0;
    for (int i = 0; i < a.size(); ++i) d = std::max(d, (a[i] - b[i]).norm());
    return d;
}

namespace {

void check_letter(int letter, int n) {
    const int i = std::abs(letter);
    if (letter == 0 || i >= n)
        throw std::invalid_argument("letter " + std::to_string(letter) +
                                    " out of range for configuration of size " +
                                    std::to_string(n));
}

}  // namespace

Configuration apply_generator(int letter, Configuration X) {
    check_letter(letter, X.size());
    const int i = std::abs(letter) - 1;
    if (letter > 0) {
        const Vec3 a = X[i];
        X[i] = half_turn(a, X[i + 1]);
        X[i + 1] = a;
    } else {
        const Vec3 b = X[i + 1];
        X[i + 1] = half_turn(b, X[i]);
        X[i] = b;
    }
    return X;
}

Configuration apply_braid(const BraidWord& b, Configuration X) {
    if (b.strands != X.size())
        throw std::invalid_argument("braid strand count does not match configuration size");
    int since_renorm = 0;
    for (int e : b.letters) {
        X = apply_generator(e, std::move(X));
        if (++since_renorm >= 16) {
            for (auto& p : X.points) p = p.normalized();
            since_renorm = 0;
        }
    }
    if (since_renorm > 0)
        for (auto& p : X.points) p = p.normalized();
    return X;
}

Quat product(const Configuration& X) {
    Quat g{1.0, 0.0, 0.0, 0.0};
    for (const auto& p : X.points) g = mul(g, pure(p));
    return g.normalized();
}

bool is_reducible(const Configuration& X, double tol) {
    if (X.size() < 2) return true;
    const Vec3 axis = X[0];
    for (int i = 1; i < X.size(); ++i)
        if (axis.cross(X[i]).norm() > tol) return false;
    return true;
}

Configuration gauge_fix(const Configuration& X) {
    if (is_reducible(X, 1e-9))
        throw std::invalid_argument("gauge_fix requires an irreducible configuration");
    const int n = X.size();
    const int anchor = (n == 2) ? 1 : 0;

    Configuration Y = X;
    for (auto& p : Y.points) p = p.normalized();

    // Rotate the anchor onto e3.
    const Vec3 a = Y[anchor];
    const double c = a.dot(e3());
    Quat g;
    if (c < -1.0 + 1e-14) {
        g = Quat::from_axis_angle(e1(), M_PI / 2.0);  // a = -e3: half turn about e1
    } else if (a.cross(e3()).norm() > 1e-14) {
        const Vec3 axis = a.cross(e3()).normalized();
        g = Quat::from_axis_angle(axis, 0.5 * std::acos(std::max(-1.0, std::min(1.0, c))));
    }
    for (auto& p : Y.points) p = conj_action(g, p).normalized();

    // Rotate about e3 so the first point off the axis lands in the
    // xz-half-plane with x >= 0.
    for (int i = 0; i < n; ++i) {
        if (i == anchor) continue;
        const Vec3& p = Y[i];
        const double r = std::hypot(p.x, p.y);
        if (r <= 1e-9) continue;  // (anti)parallel to the anchor, keep looking
        const double phi = std::atan2(p.y, p.x);
        const Quat h = Quat::from_axis_angle(e3(), -0.5 * phi);
        for (auto& q : Y.points) q = conj_action(h, q).normalized();
        break;
    }
    return Y;
}

std::vector<double> fingerprint(const Configuration& X) {
    const int n = X.size();
    std::vector<double> fp;
    fp.reserve(n * (n - 1) / 2 + (n >= 3 ? 1 : 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            fp.push_back(mul(pure(X[i]), pure(X[j])).trace());
    if (n >= 3) fp.push_back(mul(mul(pure(X[0]), pure(X[1])), pure(X[2])).trace());
    return fp;
}

TangentFrame TangentFrame::at(const Configuration& X) {
    TangentFrame f;
    f.u.reserve(X.size());
    f.v.reserve(X.size());
    for (const auto& p : X.points) {
        const Vec3 ref = (std::abs(p.dot(e3())) < 0.9) ? e3() : e1();
        const Vec3 u = ref.cross(p).normalized();
        const Vec3 v = p.cross(u);
        f.u.push_back(u);
        f.v.push_back(v);
    }
    return f;
}

Eigen::MatrixXd TangentFrame::basis(const Configuration& X) const {
    const int n = X.size();
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(3 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        F(3 * i + 0, 2 * i) = u[i].x;
        F(3 * i + 1, 2 * i) = u[i].y;
        F(3 * i + 2, 2 * i) = u[i].z;
        F(3 * i + 0, 2 * i + 1) = v[i].x;
        F(3 * i + 1, 2 * i + 1) = v[i].y;
        F(3 * i + 2, 2 * i + 1) = v[i].z;
    }
    return F;
}

namespace {

inline Eigen::Matrix3d outer(const Vec3& a, const Vec3& b) {
    Eigen::Matrix3d m;
    m << a.x * b.x, a.x * b.y, a.x * b.z,
         a.y * b.x, a.y * b.y, a.y * b.z,
         a.z * b.x, a.z * b.y, a.z * b.z;
    return m;
}

// Derivatives of R_A(B) = 2 (A.B) A - B at unit A:
//   d/dB = 2 A A^T - I          (the half-turn itself)
//   d/dA = 2 A B^T + 2 (A.B) I - 4 (A.B) A A^T
void half_turn_jacobians(const Vec3& A, const Vec3& B, Eigen::Matrix3d& dA,
                         Eigen::Matrix3d& dB) {
    const double v = A.dot(B);
    const Eigen::Matrix3d AAt = outer(A, A);
    dB = 2.0 * AAt - Eigen::Matrix3d::Identity();
    dA = 2.0 * outer(A, B) + 2.0 * v * Eigen::Matrix3d::Identity() - 4.0 * v * AAt;
}

}  // namespace

Eigen::MatrixXd braid_jacobian_ambient(const BraidWord& b, const Configuration& X0) {
    if (b.strands != X0.size())
        throw std::invalid_argument("braid strand count does not match configuration size");
    const int n = X0.size();
    Eigen::MatrixXd J = Eigen::MatrixXd::Identity(3 * n, 3 * n);
    Configuration X = X0;
    Eigen::Matrix3d dA, dB;
    for (int e : b.letters) {
        const int i = std::abs(e) - 1;
        const auto Ji = J.middleRows(3 * i, 3);
        const auto Jk = J.middleRows(3 * (i + 1), 3);
        if (e > 0) {
            half_turn_jacobians(X[i], X[i + 1], dA, dB);
            const Eigen::MatrixXd newJi = dA * Ji + dB * Jk;
            const Eigen::MatrixXd newJk = Ji;
            J.middleRows(3 * i, 3) = newJi;
            J.middleRows(3 * (i + 1), 3) = newJk;
        } else {
            half_turn_jacobians(X[i + 1], X[i], dA, dB);
            const Eigen::MatrixXd newJi = Jk;
            const Eigen::MatrixXd newJk = dB * Ji + dA * Jk;
            J.middleRows(3 * i, 3) = newJi;
            J.middleRows(3 * (i + 1), 3) = newJk;
        }
        X = apply_generator(e, std::move(X));
    }
    return J;
}

Eigen::MatrixXd braid_jacobian(const BraidWord& b, const Configuration& X,
                               const TangentFrame& F) {
    const Eigen::MatrixXd Fb = F.basis(X);
    return Fb.transpose() * braid_jacobian_ambient(b, X) * Fb;
}

Eigen::VectorXd orbit_vector(const Configuration& X, const Vec3& xi) {
    const int n = X.size();
    Eigen::VectorXd o(3 * n);
    for (int i = 0; i < n; ++i) {
        const Vec3 w = xi.cross(X[i]);
        o[3 * i + 0] = w.x;
        o[3 * i + 1] = w.y;
        o[3 * i + 2] = w.z;
    }
    return o;
}

}  // namespace cassonlin
