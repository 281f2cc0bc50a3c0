#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <random>

#include "cassonlin/su2.hpp"

using namespace cassonlin;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent oracle: the 3x3 rotation matrix of a unit quaternion, written
// out entrywise, applied to a vector.
Vec3 rotate_by_matrix(const Quat& g, const Vec3& v) {
    const double w = g.w, x = g.x, y = g.y, z = g.z;
    const std::array<std::array<double, 3>, 3> R = {{
        {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
        {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
        {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)},
    }};
    return {R[0][0] * v.x + R[0][1] * v.y + R[0][2] * v.z,
            R[1][0] * v.x + R[1][1] * v.y + R[1][2] * v.z,
            R[2][0] * v.x + R[2][1] * v.y + R[2][2] * v.z};
}

Quat random_unit_quat(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return Quat{n(rng), n(rng), n(rng), n(rng)}.normalized();
}

Vec3 random_unit_vec(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return Vec3{n(rng), n(rng), n(rng)}.normalized();
}

double dist(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

}  // namespace

TEST_CASE("quaternion multiplication table") {
    const Quat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(dist(mul(i, j).vec(), e3()) < 1e-15);
    CHECK(mul(i, j).w == 0.0);
    CHECK(dist(mul(j, k).vec(), e1()) < 1e-15);
    CHECK(dist(mul(k, i).vec(), e2()) < 1e-15);
    CHECK(mul(i, i).w == doctest::Approx(-1.0));

    const Quat mk = inverse(k);
    CHECK(mk.w == 0.0);
    CHECK(dist(mk.vec(), -e3()) < 1e-15);
}

TEST_CASE("inverse is the group inverse") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Quat q = random_unit_quat(rng);
        const Quat id = mul(q, inverse(q));
        CHECK(std::abs(id.w - 1.0) < 1e-12);
        CHECK(id.vec().norm() < 1e-12);
    }
}

TEST_CASE("conjugation acts as the rotation matrix") {
    // quarter turn about e3 sends e1 to e2
    const Quat g = Quat::from_axis_angle(e3(), kPi / 4);
    CHECK(dist(conj_action(g, e1()), e2()) < 1e-12);
    CHECK(dist(rotate_by_matrix(g, e1()), e2()) < 1e-12);

    // half turn about e3 sends e1 to -e1
    CHECK(dist(conj_action(Quat{0, 0, 0, 1}, e1()), -e1()) < 1e-15);

    // identity fixes everything
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec3 v = random_unit_vec(rng);
        CHECK(dist(conj_action(Quat{}, v), v) < 1e-15);
    }

    // random agreement with the matrix oracle
    for (int trial = 0; trial < 200; ++trial) {
        const Quat g2 = random_unit_quat(rng);
        const Vec3 v = random_unit_vec(rng);
        CHECK(dist(conj_action(g2, v), rotate_by_matrix(g2, v)) < 1e-12);
    }
}

TEST_CASE("conjugation is an isometry and a group action") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Quat g = random_unit_quat(rng), h = random_unit_quat(rng);
        const Vec3 v = random_unit_vec(rng), w = random_unit_vec(rng);

        CHECK(std::abs(conj_action(g, v).norm() - 1.0) < 1e-12);
        CHECK(std::abs(conj_action(g, v).dot(conj_action(g, w)) - v.dot(w)) < 1e-12);
        CHECK(dist(conj_action(mul(g, h), v), conj_action(g, conj_action(h, v))) < 1e-12);
    }
}

TEST_CASE("half turn formula") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 p = random_unit_vec(rng), v = random_unit_vec(rng);
        CHECK(dist(half_turn(p, v), conj_action(pure(p), v)) < 1e-12);
    }
}

TEST_CASE("polar parametrization of the xz-circle") {
    CHECK(dist(from_polar(0), e3()) < 1e-15);
    CHECK(dist(from_polar(kPi / 2), e1()) < 1e-15);
    const Vec3 p = from_polar(2 * kPi / 3);
    CHECK(p.x == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
    CHECK(p.y == 0.0);
    CHECK(p.z == doctest::Approx(-0.5).epsilon(1e-14));

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const double theta = angle(rng);
        CHECK(polar_angle(from_polar(theta)) == doctest::Approx(theta).epsilon(1e-12));
    }
}

TEST_CASE("trace is twice the scalar part") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const Quat q = random_unit_quat(rng);
        CHECK(q.trace() == 2.0 * q.w);
        CHECK(pure(random_unit_vec(rng)).trace() == 0.0);
    }
}
