#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "cassonlin/braid.hpp"
#include "cassonlin/pillowcase.hpp"
#include "cassonlin/repvar.hpp"
#include "helpers.hpp"

using namespace cassonlin;
using test_helpers::expect_throw_containing;
using test_helpers::random_word;

namespace {

constexpr double kPi = 3.14159265358979323846;

Configuration random_config(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Configuration X;
    for (int i = 0; i < n; ++i)
        X.points.push_back(Vec3{g(rng), g(rng), g(rng)}.normalized());
    return X;
}

Quat random_unit_quat(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return Quat{g(rng), g(rng), g(rng), g(rng)}.normalized();
}

Configuration conjugate_config(const Quat& g, const Configuration& X) {
    Configuration Y = X;
    for (Vec3& p : Y.points) p = conj_action(g, p);
    return Y;
}

double quat_dist(const Quat& a, const Quat& b) {
    return std::sqrt((a.w - b.w) * (a.w - b.w) + (a.x - b.x) * (a.x - b.x) +
                     (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

double fingerprint_dist(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

Eigen::VectorXd stack_config(const Configuration& X) {
    Eigen::VectorXd v(3 * X.size());
    for (int i = 0; i < X.size(); ++i) {
        v(3 * i + 0) = X[i].x;
        v(3 * i + 1) = X[i].y;
        v(3 * i + 2) = X[i].z;
    }
    return v;
}

// Central finite differences of the action along the tangent frame, read
// back in the same frame.  Tangential steps keep the points on the spheres
// to second order, so the built-in renormalization does not disturb the
// difference quotient.  Long alternating words leave ~1e-11 of rounding
// jitter on the composed action, which caps a plain central difference
// near 1e-6; the (4*FD(h) - FD(2h))/3 extrapolation removes the h^2 term
// so a noise-friendly step stays accurate.
Eigen::VectorXd fd_column(const BraidWord& b, const Configuration& X,
                          const Eigen::MatrixXd& B, int i, const Vec3& dir, double h) {
    Configuration plus = X, minus = X;
    plus.points[i] = plus.points[i] + dir * h;
    minus.points[i] = minus.points[i] - dir * h;
    return B.transpose() *
           (stack_config(apply_braid(b, plus)) - stack_config(apply_braid(b, minus))) /
           (2 * h);
}

Eigen::MatrixXd fd_jacobian_frame(const BraidWord& b, const Configuration& X,
                                  const TangentFrame& F, double h) {
    const int n = X.size();
    const Eigen::MatrixXd B = F.basis(X);
    Eigen::MatrixXd J(2 * n, 2 * n);
    for (int col = 0; col < 2 * n; ++col) {
        const int i = col / 2;
        const Vec3 dir = (col % 2 == 0) ? F.u[i] : F.v[i];
        J.col(col) =
            (4.0 * fd_column(b, X, B, i, dir, h) - fd_column(b, X, B, i, dir, 2 * h)) / 3.0;
    }
    return J;
}

}  // namespace

TEST_CASE("generator action on basis configurations") {
    Configuration X;
    X.points = {e3(), e1()};
    const Configuration Y = apply_generator(1, X);
    CHECK((Y[0] + e1()).norm() < 1e-15);  // e3 e1 e3^-1 = -e1
    CHECK((Y[1] - e3()).norm() < 1e-15);
}

TEST_CASE("generator inverse undoes the generator") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Configuration X = random_config(rng, 4);
        for (int i = 1; i <= 3; ++i) {
            CHECK(config_distance(apply_generator(-i, apply_generator(i, X)), X) < 1e-12);
            CHECK(config_distance(apply_generator(i, apply_generator(-i, X)), X) < 1e-12);
        }
    }
}

TEST_CASE("a pair on one axis is fixed by the generator") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec3 v = Vec3{g(rng), g(rng), g(rng)}.normalized();
        Configuration X;
        X.points = {v, v};
        CHECK(config_distance(apply_generator(1, X), X) < 1e-15);
    }
}

TEST_CASE("apply_braid composes letters and validates sizes") {
    std::mt19937_64 rng(7);
    const Configuration X = random_config(rng, 3);
    CHECK(config_distance(apply_braid(parse_braid("3:"), X), X) == 0.0);

    const BraidWord w = parse_braid("3: 1 -2 1");
    Configuration step = X;
    for (int e : w.letters) step = apply_generator(e, step);
    CHECK(config_distance(apply_braid(w, X), step) < 1e-15);

    expect_throw_containing<std::invalid_argument>(
        [&] { apply_braid(parse_braid("4: 1"), X); }, "strand count");
    expect_throw_containing<std::invalid_argument>([&] { apply_generator(3, X); }, "letter");
}

TEST_CASE("the trefoil fixed configuration is fixed") {
    Configuration X;
    X.points = {from_polar(2 * kPi / 3), e3()};
    CHECK(config_distance(apply_braid(parse_braid("2: 1 1 1"), X), X) < 1e-10);
}

TEST_CASE("2-strand action follows the angle-multiplication law") {
    // the image of (from_polar(theta), e3) under sigma_1^q has angle
    // coordinates (theta, (q+1) theta) on the pillowcase
    Configuration X;
    X.points = {from_polar(0.3), e3()};
    const Configuration Y = apply_braid(parse_braid("2: 1 1 1"), X);
    const auto p = angles(X, Y);
    REQUIRE(p.has_value());
    CHECK(p->theta1 == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(pillow_distance(*p, PillowPoint{0.3, 1.2}) < 1e-10);
}

TEST_CASE("braid relations hold on 1000 random configurations") {
    std::mt19937_64 rng(11);
    const BraidWord aba = parse_braid("3: 1 2 1"), bab = parse_braid("3: 2 1 2");
    for (int trial = 0; trial < 1000; ++trial) {
        const Configuration X = random_config(rng, 3);
        CHECK(config_distance(apply_braid(aba, X), apply_braid(bab, X)) < 1e-10);
    }
    const BraidWord ac = parse_braid("4: 1 3"), ca = parse_braid("4: 3 1");
    for (int trial = 0; trial < 1000; ++trial) {
        const Configuration X = random_config(rng, 4);
        CHECK(config_distance(apply_braid(ac, X), apply_braid(ca, X)) < 1e-10);
    }
}

TEST_CASE("the action preserves the product") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 3;
        const BraidWord w = random_word(rng, n, 12);
        const Configuration X = random_config(rng, n);
        CHECK(quat_dist(product(apply_braid(w, X)), product(X)) < 1e-10);
    }
}

TEST_CASE("the action is conjugation equivariant") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 3;
        const BraidWord w = random_word(rng, n, 10);
        const Configuration X = random_config(rng, n);
        const Quat g = random_unit_quat(rng);
        CHECK(config_distance(apply_braid(w, conjugate_config(g, X)),
                              conjugate_config(g, apply_braid(w, X))) < 1e-10);
    }
}

TEST_CASE("the action preserves reducibility") {
    std::mt19937_64 rng(19);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec3 v = Vec3{g(rng), g(rng), g(rng)}.normalized();
        Configuration X;
        for (int i = 0; i < 3; ++i) X.points.push_back(trial % 2 && i == 1 ? -v : v);
        REQUIRE(is_reducible(X, 1e-6));
        const BraidWord w = random_word(rng, 3, 10);
        CHECK(is_reducible(apply_braid(w, X), 1e-6));
    }
}

TEST_CASE("reducibility detection") {
    Configuration X;
    X.points = {e3(), e3(), -e3()};
    CHECK(is_reducible(X, 1e-6));

    Configuration Y;
    Y.points = {e3(), e1()};
    CHECK_FALSE(is_reducible(Y, 1e-6));

    Configuration Z;
    Z.points = {e3(), from_polar(1e-9)};
    CHECK(is_reducible(Z, 1e-6));
}

TEST_CASE("gauge fixing brings the trefoil class to normal form") {
    std::mt19937_64 rng(23);
    Configuration X;
    X.points = {from_polar(2 * kPi / 3), e3()};
    for (int trial = 0; trial < 20; ++trial) {
        const Configuration Y = conjugate_config(random_unit_quat(rng), X);
        const Configuration fixed = gauge_fix(Y);
        CHECK(config_distance(fixed, X) < 1e-8);
        CHECK(fingerprint_dist(fingerprint(fixed), fingerprint(Y)) < 1e-10);
    }
}

TEST_CASE("gauge fixing is idempotent and anchors correctly") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        Configuration X = random_config(rng, 3);
        if (is_reducible(X, 1e-3)) continue;  // keep away from the locus
        const Configuration fixed = gauge_fix(X);
        // anchor (first point for n >= 3) goes exactly to e3
        CHECK((fixed[0] - e3()).norm() < 1e-12);
        // second point lands in the xz-half-plane
        CHECK(std::abs(fixed[1].y) < 1e-12);
        CHECK(fixed[1].x >= -1e-12);
        CHECK(config_distance(gauge_fix(fixed), fixed) < 1e-10);
        CHECK(fingerprint_dist(fingerprint(fixed), fingerprint(X)) < 1e-10);
    }

    Configuration R;
    R.points = {e3(), e3()};
    CHECK_THROWS_AS(gauge_fix(R), std::invalid_argument);
}

TEST_CASE("fingerprint entries are product traces") {
    Configuration X;
    X.points = {e3(), e1()};
    const std::vector<double> fp = fingerprint(X);
    REQUIRE(fp.size() == 1);
    CHECK(std::abs(fp[0]) < 1e-15);  // e3*e1 is pure

    Configuration T;
    T.points = {from_polar(2 * kPi / 3), e3()};
    const std::vector<double> ft = fingerprint(T);
    REQUIRE(ft.size() == 1);
    CHECK(ft[0] == doctest::Approx(1.0).epsilon(1e-12));  // -2 cos(2 pi / 3)

    // n = 3: three pair traces plus the triple trace
    std::mt19937_64 rng(31);
    const Configuration Y = random_config(rng, 3);
    CHECK(fingerprint(Y).size() == 4);
}

TEST_CASE("tangent frames are orthonormal and adapted") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const Configuration X = random_config(rng, 3);
        const TangentFrame F = TangentFrame::at(X);
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(F.u[i].norm() - 1) < 1e-12);
            CHECK(std::abs(F.v[i].norm() - 1) < 1e-12);
            CHECK(std::abs(F.u[i].dot(F.v[i])) < 1e-12);
            CHECK(std::abs(F.u[i].dot(X[i])) < 1e-12);
            CHECK(std::abs(F.v[i].dot(X[i])) < 1e-12);
            CHECK((F.u[i].cross(F.v[i]) - X[i]).norm() < 1e-12);
        }
        const Eigen::MatrixXd B = F.basis(X);
        CHECK(B.rows() == 9);
        CHECK(B.cols() == 6);
        CHECK((B.transpose() * B - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);
    }
}

TEST_CASE("identity word has identity jacobian") {
    std::mt19937_64 rng(41);
    const Configuration X = random_config(rng, 3);
    const TangentFrame F = TangentFrame::at(X);
    const Eigen::MatrixXd J = braid_jacobian(parse_braid("3:"), X, F);
    CHECK((J - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-14);
}

TEST_CASE("analytic jacobian matches central finite differences") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + trial % 3;
        const BraidWord w = random_word(rng, n, 4 + trial % 9);
        const Configuration X = random_config(rng, n);
        const TangentFrame F = TangentFrame::at(X);
        const Eigen::MatrixXd J = braid_jacobian(w, X, F);
        const Eigen::MatrixXd Jfd = fd_jacobian_frame(w, X, F, 1e-5);
        const double scale = std::max(1.0, Jfd.cwiseAbs().maxCoeff());
        CHECK((J - Jfd).cwiseAbs().maxCoeff() / scale < 1e-6);
    }
}

TEST_CASE("orbit vectors are eigenvalue-one directions at fixed configurations") {
    for (int q : {3, 5, 7}) {
        BraidWord w;
        w.strands = 2;
        for (int i = 0; i < q; ++i) w.letters.push_back(1);
        for (int k = 1; k <= (q - 1) / 2; ++k) {
            Configuration X;
            X.points = {from_polar(2 * kPi * k / q), e3()};
            REQUIRE(config_distance(apply_braid(w, X), X) < 1e-10);
            const Eigen::MatrixXd J = braid_jacobian_ambient(w, X);
            for (const Vec3& xi : {e1(), e2(), e3()}) {
                const Eigen::VectorXd o = orbit_vector(X, xi);
                CHECK((J * o - o).lpNorm<Eigen::Infinity>() < 1e-8);
            }
        }
    }
}
