#pragma once

// Signed enumeration of the irreducible trace-free representation classes
// fixed by a braid word, i.e. the intersection classes whose signed count
// is the Casson-Lin invariant of the closure.
//
// Classes are found by multi-start damped Gauss-Newton on the conjugation
// gauge slice (2n-3 unknowns), deduplicated by conjugation-invariant
// fingerprints.  Each class carries the local intersection sign of the
// diagonal {(X, X)} and the braid graph {(X, beta(X))} inside the pair
// space {product(X) = product(Y)} modulo simultaneous conjugation, a
// (4n-6)-dimensional manifold in which both submanifolds have half
// dimension.  Since both tangent planes are parametrized by the same
// horizontal basis, the relative sign between classes is independent of
// every basis choice; the ambient orientation is fixed by a canonical rule,
// and one global sign is absorbed into the calibration constant.  The
// smallest singular value of the combined tangent-plane matrix measures
// transversality; classes at or below the threshold are reported with
// sign 0 and poison any signed count.

#include <cstdint>
#include <vector>

#include "cassonlin/braid.hpp"
#include "cassonlin/repvar.hpp"

namespace cassonlin {

struct SolverOptions {
    int seed_count = 0;            // 0 = default 200 * strands
    std::uint64_t rng_seed = 0;    // offsets the quasi-random seed sequence
    double tol = 1e-10;            // max residual |beta(X) - X| for acceptance
    int max_iters = 80;            // Gauss-Newton iteration cap per seed
    bool dihedral_seeding = true;  // also seed the binary dihedral locus
};

// Nondegeneracy threshold on the smallest singular value of the reduced
// return map.
inline constexpr double kDegenerateTol = 1e-6;

struct RepClass {
    Configuration config;            // gauge-fixed representative
    std::vector<double> fingerprint;
    double residual = 0.0;           // max |beta(X)_i - X_i|
    double min_singular = 0.0;       // transversality of the two tangent planes
    double det_return = 0.0;         // oriented intersection determinant, in [-1, 1]
    int sign = 0;                    // +-1, or 0 when degenerate
};

// All irreducible fixed classes of b, sorted by fingerprint.
// Requires is_knot(b) and seed_count >= 0.
std::vector<RepClass> find_classes(const BraidWord& b, const SolverOptions& opts = {});

struct LefschetzData {
    int sign = 0;
    double min_singular = 0.0;
    double det_return = 0.0;
    double orbit_kernel_residual = 0.0;  // |(I - d beta) o| over orbit vectors o
};

// Sign data at a fixed configuration (residual must already be small).
LefschetzData lefschetz_data(const BraidWord& b, const Configuration& X);

// sign of the class; throws DegenerateClassError at or below threshold.
int lefschetz_sign(const BraidWord& b, const Configuration& X);

// Calibrated signed count: casson_lin(sigma_1^3) = +1.  Throws
// DegenerateClassError if any class is degenerate.
long long casson_lin(const BraidWord& b, const SolverOptions& opts = {});

// Global calibration constant applied to the sum of class signs.
inline constexpr int kCalibrationSign = -1;

// A basin located by the grid oracle.
struct Basin {
    Configuration center;
    double residual = 0.0;
};

// Derivative-free oracle for n <= 3: scan the gauge slice on a grid of the
// given resolution (radians), cluster sublevel points of |beta(X) - X|,
// then refine each cluster by pure grid shrinking.  Never calls the
// Gauss-Newton path.
std::vector<Basin> brute_force_scan(const BraidWord& b, double resolution);

}  // namespace cassonlin
