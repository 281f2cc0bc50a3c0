#include "cassonlin/pillowcase.hpp"

#include <cmath>
#include <stdexcept>

namespace cassonlin {

namespace {

constexpr double kPlaneTol = 1e-8;     // how far out of the xz-plane we tolerate
constexpr double kBoundaryTol = 1e-9;  // distance to the corners theta = 0, pi

double wrap_2pi(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

}  // namespace

double pillow_distance(const PillowPoint& a, const PillowPoint& b) {
    const double direct =
        std::max(std::abs(wrap_2pi(a.theta1 - b.theta1)), std::abs(wrap_2pi(a.theta2 - b.theta2)));
    const double flipped =
        std::max(std::abs(wrap_2pi(a.theta1 + b.theta1)), std::abs(wrap_2pi(a.theta2 + b.theta2)));
    return std::min(direct, flipped);
}

std::optional<PillowPoint> angles(const Configuration& X, const Configuration& Y) {
    if (X.size() != 2 || Y.size() != 2)
        throw std::invalid_argument("angles is defined for 2-strand configurations");
    if ((X[1] - e3()).norm() > kPlaneTol)
        throw std::invalid_argument("angles requires a gauge-fixed pair with second point e3");
    if (std::abs(X[0].y) > kPlaneTol || std::abs(Y[0].y) > kPlaneTol)
        throw std::invalid_argument("angles requires X_1 and Y_1 in the xz-plane");

    if (std::hypot(X[0].x, X[0].y) <= kBoundaryTol || std::hypot(Y[0].x, Y[0].y) <= kBoundaryTol)
        return std::nullopt;  // pillowcase corner: reducible locus

    PillowPoint p{polar_angle(X[0]), polar_angle(Y[0])};
    if (p.theta1 < 0) {  // fold into the fundamental domain theta1 in (0, pi)
        p.theta1 = -p.theta1;
        p.theta2 = wrap_2pi(-p.theta2);
    }
    return p;
}

std::vector<PillowPoint> torus_fixed_points(int q) {
    if (q % 2 == 0) throw std::invalid_argument("sigma_1^q closes to a link for even q");
    if (q < 0 && q != -1 && q != -3)
        throw std::invalid_argument("left-handed torus words are only tabulated for q = -3");
    const int a = std::abs(q);
    std::vector<PillowPoint> fix;
    for (int k = 1; k <= (a - 1) / 2; ++k) {
        const double t = 2.0 * M_PI * k / a;
        fix.push_back({t, t});
    }
    return fix;
}

int torus_maslov(int q, int k) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("torus_maslov requires odd q >= 3");
    if (k < 1 || k > (q - 1) / 2)
        throw std::invalid_argument("fixed class index out of range for q = " + std::to_string(q));
    return -2 * k + 1;
}

GradedGroups torus_floer(int q) {
    if (q % 2 == 0) throw std::invalid_argument("sigma_1^q closes to a link for even q");
    GradedGroups groups;
    if (q == 1 || q == -1) return groups;  // unknot: trivial groups
    if (q == -3) {
        groups[0] = 1;  // left trefoil: single generator, degree shifted to 0
        return groups;
    }
    if (q < 0) throw std::invalid_argument("left-handed torus words are only tabulated for q = -3");
    for (int k = 1; k <= (q - 1) / 2; ++k) groups[torus_maslov(q, k)] = 1;
    return groups;
}

int euler_char(const GradedGroups& groups) {
    int chi = 0;
    for (const auto& [degree, rank] : groups) chi += (degree % 2 == 0) ? rank : -rank;
    return chi;
}

}  // namespace cassonlin
