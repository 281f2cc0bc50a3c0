#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cassonlin/braid.hpp"
#include "cassonlin/fixedpoints.hpp"
#include "cassonlin/pillowcase.hpp"
#include "helpers.hpp"

using namespace cassonlin;
using test_helpers::expect_throw_containing;

namespace {

constexpr double kPi = 3.14159265358979323846;

BraidWord torus_word(int q) {
    BraidWord w;
    w.strands = 2;
    for (int i = 0; i < std::abs(q); ++i) w.letters.push_back(q > 0 ? 1 : -1);
    return w;
}

double theta_of(const RepClass& c) { return polar_angle(c.config[0]); }

}  // namespace

TEST_CASE("unknot words have no irreducible classes") {
    CHECK(find_classes(parse_braid("2: 1")).empty());
    CHECK(find_classes(parse_braid("2: -1")).empty());
    CHECK(casson_lin(parse_braid("2: 1")) == 0);
}

TEST_CASE("trefoil has a single class at the known angles") {
    const std::vector<RepClass> classes = find_classes(parse_braid("2: 1 1 1"));
    REQUIRE(classes.size() == 1);
    const RepClass& c = classes[0];
    CHECK(c.residual <= 1e-10);
    CHECK(std::abs(theta_of(c) - 2 * kPi / 3) < 1e-6);
    CHECK((c.config[1] - e3()).norm() < 1e-12);  // gauge anchor
    CHECK_FALSE(is_reducible(c.config, 1e-6));
    CHECK(c.min_singular > kDegenerateTol);
    CHECK(kCalibrationSign * c.sign == 1);  // the calibrated count is +1
    CHECK(casson_lin(parse_braid("2: 1 1 1")) == 1);
}

TEST_CASE("torus series: counts, locations, equal signs, intersection determinant") {
    for (int q : {3, 5, 7, 9}) {
        const std::vector<RepClass> classes = find_classes(torus_word(q));
        REQUIRE(classes.size() == static_cast<std::size_t>((q - 1) / 2));

        std::vector<bool> hit(classes.size(), false);
        const double expected_det = -q / std::sqrt(double(q) * q + 1);
        for (const RepClass& c : classes) {
            CHECK(c.sign == classes[0].sign);  // all classes carry one sign
            CHECK(c.det_return == doctest::Approx(expected_det).epsilon(1e-6));
            const double theta = theta_of(c);
            for (std::size_t k = 1; k <= classes.size(); ++k)
                if (std::abs(theta - 2 * kPi * double(k) / q) < 1e-6) hit[k - 1] = true;
        }
        for (std::size_t k = 0; k < hit.size(); ++k) CHECK(hit[k]);

        CHECK(casson_lin(torus_word(q)) == (q - 1) / 2);
    }
}

TEST_CASE("mirror words negate the count and the determinant data") {
    const std::vector<RepClass> left = find_classes(torus_word(-3));
    REQUIRE(left.size() == 1);
    CHECK(left[0].det_return == doctest::Approx(3.0 / std::sqrt(10.0)).epsilon(1e-6));
    CHECK(casson_lin(torus_word(-3)) == -1);
    CHECK(casson_lin(torus_word(-5)) == -2);
}

TEST_CASE("figure-eight: two classes of opposite sign") {
    const BraidWord b = parse_braid("3: 1 -2 1 -2");
    const std::vector<RepClass> classes = find_classes(b);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].sign + classes[1].sign == 0);
    CHECK(classes[0].sign != 0);
    CHECK(std::abs(classes[0].det_return) == doctest::Approx(std::abs(classes[1].det_return))
                                                 .epsilon(1e-6));
    CHECK(casson_lin(b) == 0);
}

TEST_CASE("the 3-strand trefoil word gives the same count") {
    const std::vector<RepClass> classes = find_classes(parse_braid("3: 1 2 1 2"));
    REQUIRE(classes.size() == 1);
    CHECK(casson_lin(parse_braid("3: 1 2 1 2")) == 1);
}

TEST_CASE("results are deterministic for fixed options") {
    SolverOptions opts;
    opts.rng_seed = 12345;
    const BraidWord b = parse_braid("3: 1 -2 1 -2");
    const std::vector<RepClass> a = find_classes(b, opts);
    const std::vector<RepClass> c = find_classes(b, opts);
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].residual == c[i].residual);
        CHECK(a[i].det_return == c[i].det_return);
        CHECK(a[i].sign == c[i].sign);
        REQUIRE(a[i].fingerprint.size() == c[i].fingerprint.size());
        for (std::size_t k = 0; k < a[i].fingerprint.size(); ++k)
            CHECK(a[i].fingerprint[k] == c[i].fingerprint[k]);
    }
}

TEST_CASE("class sets are stable under reseeding and more seeds") {
    const BraidWord b = parse_braid("2: 1 1 1 1 1");
    const std::vector<RepClass> base = find_classes(b);

    SolverOptions reseeded;
    reseeded.rng_seed = 777;
    const std::vector<RepClass> other = find_classes(b, reseeded);
    REQUIRE(other.size() == base.size());

    SolverOptions heavy;
    heavy.seed_count = 800;
    const std::vector<RepClass> more = find_classes(b, heavy);
    REQUIRE(more.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(std::abs(theta_of(base[i]) - theta_of(more[i])) < 1e-8);

    SolverOptions no_dihedral;
    no_dihedral.dihedral_seeding = false;
    CHECK(find_classes(b, no_dihedral).size() == base.size());
}

TEST_CASE("solver input validation") {
    expect_throw_containing<NotAKnotError>([] { find_classes(parse_braid("2: 1 1")); },
                                           "not a knot");
    SolverOptions bad_seeds;
    bad_seeds.seed_count = -1;
    expect_throw_containing<std::invalid_argument>(
        [&] { find_classes(parse_braid("2: 1"), bad_seeds); }, "seed_count");
    SolverOptions bad_tol;
    bad_tol.tol = 0.0;
    expect_throw_containing<std::invalid_argument>(
        [&] { find_classes(parse_braid("2: 1"), bad_tol); }, "tolerance");
}

TEST_CASE("orbit directions stay in the kernel of the return map") {
    for (const char* text : {"2: 1 1 1", "2: 1 1 1 1 1", "3: 1 -2 1 -2", "3: 1 2 1 2"}) {
        const BraidWord b = parse_braid(text);
        for (const RepClass& c : find_classes(b)) {
            const LefschetzData data = lefschetz_data(b, c.config);
            CHECK(data.orbit_kernel_residual <= 1e-8);
            CHECK(data.sign == c.sign);
            CHECK(data.min_singular == doctest::Approx(c.min_singular).epsilon(1e-9));
            CHECK(lefschetz_sign(b, c.config) == c.sign);
        }
    }
}

TEST_CASE("a totally degenerate fixed class is a terminal error") {
    // the identity braid fixes everything; graph and diagonal coincide
    Configuration X;
    X.points = {e3(), e1()};
    const BraidWord id = parse_braid("2:");
    const LefschetzData data = lefschetz_data(id, X);
    CHECK(data.sign == 0);
    CHECK(data.min_singular <= kDegenerateTol);
    CHECK_THROWS_AS((void)lefschetz_sign(id, X), DegenerateClassError);
}

TEST_CASE("grid oracle finds the torus basins") {
    const std::vector<Basin> b3 = brute_force_scan(parse_braid("2: 1 1 1"), 0.005);
    REQUIRE(b3.size() == 1);
    CHECK(std::abs(polar_angle(b3[0].center[0]) - 2 * kPi / 3) < 0.01);

    const std::vector<Basin> b5 = brute_force_scan(parse_braid("2: 1 1 1 1 1"), 0.005);
    REQUIRE(b5.size() == 2);

    CHECK(brute_force_scan(parse_braid("2: 1"), 0.005).empty());

    expect_throw_containing<std::invalid_argument>(
        [] { brute_force_scan(parse_braid("4: 1 2 3"), 0.01); }, "3 strands");
    expect_throw_containing<std::invalid_argument>(
        [] { brute_force_scan(parse_braid("2: 1 1 1"), 0.0); }, "resolution");
}

TEST_CASE("grid oracle agrees with the solver") {
    for (const char* text : {"2: 1 1 1", "2: 1 1 1 1 1", "3: 1 -2 1 -2", "3: 1 2 1 2"}) {
        const BraidWord b = parse_braid(text);
        const double res = b.strands == 2 ? 0.005 : 0.02;
        const std::vector<Basin> basins = brute_force_scan(b, res);
        const std::vector<RepClass> classes = find_classes(b);
        REQUIRE(basins.size() == classes.size());
        for (const RepClass& c : classes) {
            double best = 1e9;
            for (const Basin& basin : basins) {
                const Configuration g = gauge_fix(basin.center);
                best = std::min(best, config_distance(g, c.config));
            }
            CHECK(best < 2 * res);
        }
    }
}
