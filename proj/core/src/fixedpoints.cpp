#include "cassonlin/fixedpoints.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace cassonlin {

namespace {

// ---------------------------------------------------------------------------
// Gauge slice.
//
// n = 2: X = (from_polar(theta), e3); one unknown.
// n >= 3: X = (e3, from_polar(theta), X_3, ..., X_n); X_2 carries one unknown
// (its polar angle, free over the whole circle so the slice meets every
// conjugation orbit), each further point a full tangent plane: 2n-3 unknowns.

int angle_slot(int n) { return n == 2 ? 0 : 1; }

struct SliceFrame {
    Eigen::MatrixXd T;          // 3n x (2n-3) slice tangent directions
    std::vector<Vec3> u, v;     // tangent pairs for the free slots (n >= 3)
};

SliceFrame slice_frame(const Configuration& X) {
    const int n = X.size();
    const int m = 2 * n - 3;
    SliceFrame fr;
    fr.T = Eigen::MatrixXd::Zero(3 * n, m);
    const int a = angle_slot(n);
    const double theta = polar_angle(X[a]);
    fr.T(3 * a + 0, 0) = std::cos(theta);
    fr.T(3 * a + 2, 0) = -std::sin(theta);
    fr.u.assign(n, Vec3{});
    fr.v.assign(n, Vec3{});
    int col = 1;
    for (int i = 2; i < n; ++i) {
        const Vec3 ref = (std::abs(X[i].dot(e3())) < 0.9) ? e3() : e1();
        fr.u[i] = ref.cross(X[i]).normalized();
        fr.v[i] = X[i].cross(fr.u[i]);
        fr.T(3 * i + 0, col) = fr.u[i].x;
        fr.T(3 * i + 1, col) = fr.u[i].y;
        fr.T(3 * i + 2, col) = fr.u[i].z;
        ++col;
        fr.T(3 * i + 0, col) = fr.v[i].x;
        fr.T(3 * i + 1, col) = fr.v[i].y;
        fr.T(3 * i + 2, col) = fr.v[i].z;
        ++col;
    }
    return fr;
}

Configuration slice_retract(const Configuration& X, const SliceFrame& fr,
                            const Eigen::VectorXd& step) {
    const int n = X.size();
    Configuration Y = X;
    const int a = angle_slot(n);
    Y[a] = from_polar(polar_angle(X[a]) + step[0]);
    int col = 1;
    for (int i = 2; i < n; ++i) {
        const Vec3 d = fr.u[i] * step[col] + fr.v[i] * step[col + 1];
        Y[i] = (X[i] + d).normalized();
        col += 2;
    }
    return Y;
}

void apply_letter_inplace(int e, Configuration& X) {
    const int i = std::abs(e) - 1;
    if (e > 0) {
        const Vec3 a = X[i];
        X[i] = half_turn(a, X[i + 1]);
        X[i + 1] = a;
    } else {
        const Vec3 b = X[i + 1];
        X[i + 1] = half_turn(b, X[i]);
        X[i] = b;
    }
}

// Residual without any allocation; scratch must have the right size.
double scan_residual(const BraidWord& b, const Configuration& X, Configuration& scratch) {
    scratch = X;
    for (int e : b.letters) apply_letter_inplace(e, scratch);
    double r = 0.0;
    for (int i = 0; i < X.size(); ++i) r = std::max(r, (scratch[i] - X[i]).norm());
    return r;
}

double residual_max(const Configuration& X, const Configuration& Y) {
    double r = 0.0;
    for (int i = 0; i < X.size(); ++i) r = std::max(r, (Y[i] - X[i]).norm());
    return r;
}

Eigen::VectorXd residual_vec(const Configuration& X, const Configuration& Y) {
    const int n = X.size();
    Eigen::VectorXd f(3 * n);
    for (int i = 0; i < n; ++i) {
        const Vec3 d = Y[i] - X[i];
        f[3 * i + 0] = d.x;
        f[3 * i + 1] = d.y;
        f[3 * i + 2] = d.z;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Damped Gauss-Newton (Levenberg-Marquardt flavour) on the slice.

std::optional<Configuration> gauss_newton(const BraidWord& b, Configuration X,
                                          const SolverOptions& opts) {
    const int n = X.size();
    const int m = 2 * n - 3;
    double lambda = 1e-3;
    Configuration Y = apply_braid(b, X);
    double cost = residual_vec(X, Y).squaredNorm();

    for (int iter = 0; iter < opts.max_iters; ++iter) {
        const double r = residual_max(X, Y);
        if (r <= 0.05 * opts.tol) break;
        if (iter > 40 && r > 1e-2) return std::nullopt;  // hopeless basin

        const SliceFrame fr = slice_frame(X);
        const Eigen::MatrixXd J =
            (braid_jacobian_ambient(b, X) - Eigen::MatrixXd::Identity(3 * n, 3 * n)) * fr.T;
        const Eigen::VectorXd F = residual_vec(X, Y);
        const Eigen::VectorXd g = J.transpose() * F;
        const Eigen::MatrixXd H = J.transpose() * J;

        bool accepted = false;
        for (int attempt = 0; attempt < 12; ++attempt) {
            Eigen::MatrixXd Hd = H;
            for (int k = 0; k < m; ++k) Hd(k, k) += lambda;
            const Eigen::VectorXd step = Hd.ldlt().solve(-g);
            const Configuration Xn = slice_retract(X, fr, step);
            const Configuration Yn = apply_braid(b, Xn);
            const double costn = residual_vec(Xn, Yn).squaredNorm();
            if (costn < cost) {
                X = Xn;
                Y = Yn;
                cost = costn;
                lambda = std::max(lambda / 3.0, 1e-14);
                accepted = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!accepted) break;  // stalled; the final residual check decides
    }
    if (residual_max(X, apply_braid(b, X)) <= opts.tol) return X;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quasi-random seeding: Halton sequences with a deterministic per-dimension
// rotation derived from rng_seed.

double halton(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::array<int, 8> kPrimes{2, 3, 5, 7, 11, 13, 17, 19};

std::vector<double> seed_offsets(std::uint64_t rng_seed, int dims) {
    std::vector<double> off(dims);
    for (int j = 0; j < dims; ++j)
        off[j] = static_cast<double>(splitmix64(rng_seed * 1315423911ULL + j) >> 11) /
                 static_cast<double>(1ULL << 53);
    return off;
}

double frac(double x) { return x - std::floor(x); }

Vec3 sphere_point(double a, double bb) {
    const double z = 2.0 * a - 1.0;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * M_PI * bb;
    return {r * std::cos(phi), r * std::sin(phi), z};
}

std::vector<Configuration> make_seeds(int n, const SolverOptions& opts) {
    const int total = opts.seed_count > 0 ? opts.seed_count : 200 * n;
    const bool dihedral = opts.dihedral_seeding && n >= 3;
    const int general = dihedral ? (total + 1) / 2 : total;
    const int on_circle = total - general;

    std::vector<Configuration> seeds;
    seeds.reserve(total);

    if (n == 2) {
        const auto off = seed_offsets(opts.rng_seed, 1);
        for (int k = 0; k < general; ++k) {
            const double theta = M_PI * frac(halton(k + 1, 2) + off[0]);
            Configuration X;
            X.points = {from_polar(theta), e3()};
            seeds.push_back(std::move(X));
        }
        return seeds;
    }

    const int gdims = 2 * n - 3;
    const auto goff = seed_offsets(opts.rng_seed, gdims);
    for (int k = 0; k < general; ++k) {
        Configuration X;
        X.points.resize(n);
        X[0] = e3();
        X[1] = from_polar(2.0 * M_PI * frac(halton(k + 1, kPrimes[0]) + goff[0]) - M_PI);
        int d = 1;
        for (int i = 2; i < n; ++i) {
            const double a = frac(halton(k + 1, kPrimes[d]) + goff[d]);
            const double bb = frac(halton(k + 1, kPrimes[d + 1]) + goff[d + 1]);
            X[i] = sphere_point(a, bb);
            d += 2;
        }
        seeds.push_back(std::move(X));
    }

    // Binary dihedral locus: every point on the xz-circle.  For 2-bridge
    // knots all irreducible trace-free classes live here, so this seeding
    // covers a much lower-dimensional torus.
    const int ddims = n - 1;
    const auto doff = seed_offsets(splitmix64(opts.rng_seed + 1), ddims);
    for (int k = 0; k < on_circle; ++k) {
        Configuration X;
        X.points.resize(n);
        X[0] = e3();
        for (int i = 1; i < n; ++i)
            X[i] = from_polar(2.0 * M_PI * frac(halton(k + 1, kPrimes[i - 1]) + doff[i - 1]));
        seeds.push_back(std::move(X));
    }
    return seeds;
}

constexpr double kReducibleTol = 1e-6;   // solutions closer than this to the
                                         // reducible locus are discarded
constexpr double kDedupFingerTol = 1e-6;
constexpr double kDedupConfigTol = 1e-4;

}  // namespace

// ---------------------------------------------------------------------------
// Sign of a class as an intersection number.
//
// Work in the pair space {(X, Y) : prod X = prod Y} modulo simultaneous
// conjugation (dimension 4n-6).  The diagonal {(X, X)} and the graph
// {(X, beta X)} each descend to half-dimensional submanifolds meeting at the
// fixed classes; the class sign is the sign of their intersection there.
//
// Both tangent planes are parametrized by the same horizontal space h
// (orbit complement in T_X Q): e |-> (e, e) and e |-> (e, d beta e), so the
// relative sign needs no orientation transport along the submanifolds: only
// an ambient orientation, built canonically from the product orientation of
// the spheres minus the conjugation-orbit and product-normal directions.

namespace {

// Columns orthonormalized with the orientation (sign of the basis
// determinant) preserved.
Eigen::MatrixXd orthonormal_oriented(const Eigen::MatrixXd& A) {
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(A.rows(), A.cols());
    const Eigen::MatrixXd R = qr.matrixQR().topRows(A.cols()).triangularView<Eigen::Upper>();
    for (int j = 0; j < A.cols(); ++j)
        if (R(j, j) < 0) Q.col(j) = -Q.col(j);
    return Q;
}

}  // namespace

LefschetzData lefschetz_data(const BraidWord& b, const Configuration& X) {
    const int n = X.size();
    LefschetzData out;

    const TangentFrame frame = TangentFrame::at(X);
    const Eigen::MatrixXd Fb = frame.basis(X);
    const Eigen::MatrixXd Jf = Fb.transpose() * braid_jacobian_ambient(b, X) * Fb;

    // Conjugation directions in frame coordinates; at a fixed point they are
    // eigenvectors of the return map with eigenvalue 1.
    Eigen::MatrixXd O(2 * n, 3);
    const std::array<Vec3, 3> xis{e1(), e2(), e3()};
    double okr = 0.0;
    for (int j = 0; j < 3; ++j) {
        const Eigen::VectorXd o = Fb.transpose() * orbit_vector(X, xis[j]);
        O.col(j) = o;
        const double denom = std::max(1.0, o.lpNorm<Eigen::Infinity>());
        okr = std::max(okr, (Jf * o - o).lpNorm<Eigen::Infinity>() / denom);
    }
    out.orbit_kernel_residual = okr;

    // Differential of the product map, right-translated to pure quaternions.
    std::vector<Quat> prefix(n + 1), suffix(n + 1);
    prefix[0] = Quat{1, 0, 0, 0};
    for (int i = 0; i < n; ++i) prefix[i + 1] = mul(prefix[i], pure(X[i]));
    suffix[n] = Quat{1, 0, 0, 0};
    for (int i = n - 1; i >= 0; --i) suffix[i] = mul(pure(X[i]), suffix[i + 1]);
    const Quat ginv = prefix[n].normalized().conjugate();

    Eigen::MatrixXd D(3, 2 * n);
    for (int col = 0; col < 2 * n; ++col) {
        const int i = col / 2;
        const Vec3 f = (col % 2 == 0) ? frame.u[i] : frame.v[i];
        const Quat dq = mul(mul(prefix[i], pure(f)), suffix[i + 1]);
        const Vec3 w = mul(dq, ginv).vec();
        D(0, col) = w.x;
        D(1, col) = w.y;
        D(2, col) = w.z;
    }

    // Tangent space of the pair variety {product equal} as ker S.
    Eigen::MatrixXd S(3, 4 * n);
    S.leftCols(2 * n) = D;
    S.rightCols(2 * n) = -D;
    Eigen::JacobiSVD<Eigen::MatrixXd> svdS(S, Eigen::ComputeFullV);
    if (svdS.singularValues()(2) <= 1e-8) return out;  // product map not submersive: degenerate
    const Eigen::MatrixXd K = svdS.matrixV().rightCols(4 * n - 3);

    // Diagonal conjugation orbit inside ker S, orthonormalized.
    Eigen::MatrixXd E(4 * n, 3);
    E.topRows(2 * n) = O;
    E.bottomRows(2 * n) = O;
    const Eigen::MatrixXd Eo = orthonormal_oriented(E);

    // Orthonormal basis Z of the quotient V = ker S minus the orbit.
    const Eigen::MatrixXd P = K - Eo * (Eo.transpose() * K);
    Eigen::JacobiSVD<Eigen::MatrixXd> svdP(P, Eigen::ComputeFullU);
    if (svdP.singularValues()(4 * n - 7) <= 0.5) return out;  // orbit not inside ker S
    const Eigen::MatrixXd Z = svdP.matrixU().leftCols(4 * n - 6);

    // Horizontal space h: orbit complement inside T_X Q (frame coordinates).
    const int m = 2 * n - 3;
    Eigen::HouseholderQR<Eigen::MatrixXd> qrO(O);
    const Eigen::MatrixXd h =
        (qrO.householderQ() * Eigen::MatrixXd::Identity(2 * n, 2 * n)).rightCols(m);

    // Tangent planes of the diagonal and of the graph, in Z coordinates.
    Eigen::MatrixXd AB(4 * n - 6, 2 * m);
    {
        Eigen::MatrixXd pair(4 * n, m);
        pair.topRows(2 * n) = h;
        pair.bottomRows(2 * n) = h;
        AB.leftCols(m) = Z.transpose() * pair;
        pair.bottomRows(2 * n) = Jf * h;
        AB.rightCols(m) = Z.transpose() * pair;
    }
    AB.leftCols(m) = orthonormal_oriented(AB.leftCols(m));
    AB.rightCols(m) = orthonormal_oriented(AB.rightCols(m));

    // Ambient orientation: compare (Z | diagonal orbit | product normal)
    // against the canonical frame orientation of the pair space.
    Eigen::MatrixXd full(4 * n, 4 * n);
    full.leftCols(4 * n - 6) = Z;
    full.block(0, 4 * n - 6, 4 * n, 3) = E;
    full.rightCols(3) = S.transpose();
    const double ambient = Eigen::FullPivLU<Eigen::MatrixXd>(full).determinant();

    Eigen::JacobiSVD<Eigen::MatrixXd> svdM(AB);
    out.min_singular = svdM.singularValues()(4 * n - 7);
    const double det = Eigen::FullPivLU<Eigen::MatrixXd>(AB).determinant();
    out.det_return = (ambient > 0) ? det : -det;
    if (out.min_singular > kDegenerateTol) out.sign = (out.det_return > 0) ? 1 : -1;
    return out;
}

int lefschetz_sign(const BraidWord& b, const Configuration& X) {
    const LefschetzData d = lefschetz_data(b, X);
    if (d.sign == 0)
        throw DegenerateClassError("fixed class of " + to_text(b) +
                                   " is degenerate (min singular value " +
                                   std::to_string(d.min_singular) + ")");
    return d.sign;
}

// ---------------------------------------------------------------------------

std::vector<RepClass> find_classes(const BraidWord& b, const SolverOptions& opts) {
    if (!is_knot(b)) throw NotAKnotError("closure of " + to_text(b) + " is not a knot");
    if (opts.seed_count < 0) throw std::invalid_argument("seed_count must be nonnegative");
    if (opts.tol <= 0) throw std::invalid_argument("tolerance must be positive");

    std::vector<RepClass> classes;
    for (const Configuration& seed : make_seeds(b.strands, opts)) {
        auto sol = gauss_newton(b, seed, opts);
        if (!sol) continue;
        if (is_reducible(*sol, kReducibleTol)) continue;

        RepClass cls;
        cls.config = gauge_fix(*sol);
        cls.residual = residual_max(cls.config, apply_braid(b, cls.config));
        cls.fingerprint = fingerprint(cls.config);

        bool duplicate = false;
        for (RepClass& known : classes) {
            double fd = 0.0;
            for (std::size_t k = 0; k < cls.fingerprint.size(); ++k)
                fd = std::max(fd, std::abs(cls.fingerprint[k] - known.fingerprint[k]));
            if (fd <= kDedupFingerTol &&
                config_distance(cls.config, known.config) <= kDedupConfigTol) {
                if (cls.residual < known.residual) {
                    known.config = cls.config;
                    known.fingerprint = cls.fingerprint;
                    known.residual = cls.residual;
                }
                duplicate = true;
                break;
            }
        }
        if (!duplicate) classes.push_back(std::move(cls));
    }

    std::sort(classes.begin(), classes.end(),
              [](const RepClass& a, const RepClass& b) { return a.fingerprint < b.fingerprint; });

    for (RepClass& cls : classes) {
        const LefschetzData d = lefschetz_data(b, cls.config);
        cls.min_singular = d.min_singular;
        cls.det_return = d.det_return;
        cls.sign = d.sign;
    }
    return classes;
}

long long casson_lin(const BraidWord& b, const SolverOptions& opts) {
    long long sum = 0;
    for (const RepClass& cls : find_classes(b, opts)) {
        if (cls.sign == 0)
            throw DegenerateClassError("degenerate fixed class of " + to_text(b) +
                                       "; signed count undefined");
        sum += cls.sign;
    }
    return kCalibrationSign * sum;
}

// ---------------------------------------------------------------------------
// Grid oracle.

namespace {

constexpr double kSublevelFactor = 25.0;  // sublevel threshold = factor * resolution
constexpr double kBasinAcceptTol = 1e-6;  // refined residual needed to accept a basin
constexpr double kScanReducibleTol = 1e-3;

// Pattern search: shrink a grid box around the running argmin, staying on
// the slice.  Purely derivative-free.
void refine_basin(const BraidWord& b, Configuration& X, double& r, double h) {
    Configuration scratch = X;
    Configuration best = X;
    const int n = X.size();
    for (int round = 0; round < 220 && h > 1e-10; ++round) {
        bool moved = false;
        const double theta0 = polar_angle(X[angle_slot(n)]);
        // candidate offsets in each slice coordinate, one at a time
        for (int dir = -1; dir <= 1; dir += 2) {
            Configuration Y = X;
            Y[angle_slot(n)] = from_polar(theta0 + dir * h);
            const double rr = scan_residual(b, Y, scratch);
            if (rr < r) {
                best = Y;
                r = rr;
                moved = true;
            }
        }
        for (int i = 2; i < n; ++i) {
            const Vec3 ref = (std::abs(X[i].dot(e3())) < 0.9) ? e3() : e1();
            const Vec3 u = ref.cross(X[i]).normalized();
            const Vec3 v = X[i].cross(u);
            for (const Vec3& d : {u, -u, v, -v}) {
                Configuration Y = X;
                Y[i] = (X[i] + d * h).normalized();
                const double rr = scan_residual(b, Y, scratch);
                if (rr < r) {
                    best = Y;
                    r = rr;
                    moved = true;
                }
            }
        }
        if (moved)
            X = best;
        else
            h *= 0.5;
    }
}

}  // namespace

std::vector<Basin> brute_force_scan(const BraidWord& b, double resolution) {
    if (b.strands > 3)
        throw std::invalid_argument("brute_force_scan supports at most 3 strands");
    if (!(resolution > 0)) throw std::invalid_argument("resolution must be positive");
    if (!is_knot(b)) throw NotAKnotError("closure of " + to_text(b) + " is not a knot");

    const int n = b.strands;
    const double tau = kSublevelFactor * resolution;

    struct Candidate {
        Configuration X;
        double r;
    };
    std::vector<Candidate> sublevel;

    Configuration scratch;
    scratch.points.resize(n);

    if (n == 2) {
        Configuration X;
        X.points = {from_polar(0.0), e3()};
        for (double theta = 0.5 * resolution; theta < M_PI; theta += resolution) {
            X[0] = from_polar(theta);
            const double r = scan_residual(b, X, scratch);
            if (r <= tau) sublevel.push_back({X, r});
        }
    } else {
        const int sphere_count = static_cast<int>(std::ceil(4.0 * M_PI / (resolution * resolution)));
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        Configuration X;
        X.points.resize(3);
        X[0] = e3();
        for (double theta = 0.5 * resolution; theta < 2.0 * M_PI; theta += resolution) {
            X[1] = from_polar(theta);
            for (int k = 0; k < sphere_count; ++k) {
                const double z = 1.0 - (2.0 * k + 1.0) / sphere_count;
                const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
                const double phi = golden * k;
                X[2] = {rad * std::cos(phi), rad * std::sin(phi), z};
                const double r = scan_residual(b, X, scratch);
                if (r <= tau) sublevel.push_back({X, r});
            }
        }
    }

    // Greedy clustering from the deepest point outward.
    std::sort(sublevel.begin(), sublevel.end(),
              [](const Candidate& a, const Candidate& b) { return a.r < b.r; });
    std::vector<Candidate> centers;
    for (const Candidate& c : sublevel) {
        bool absorbed = false;
        for (const Candidate& ctr : centers)
            if (config_distance(c.X, ctr.X) <= 3.0 * resolution) {
                absorbed = true;
                break;
            }
        if (!absorbed) centers.push_back(c);
    }

    std::vector<Basin> basins;
    for (Candidate& c : centers) {
        refine_basin(b, c.X, c.r, resolution);
        if (c.r > kBasinAcceptTol) continue;
        if (is_reducible(c.X, kScanReducibleTol)) continue;
        const std::vector<double> fp = fingerprint(c.X);
        bool duplicate = false;
        for (const Basin& known : basins) {
            const std::vector<double> kfp = fingerprint(known.center);
            double fd = 0.0;
            for (std::size_t k = 0; k < fp.size(); ++k)
                fd = std::max(fd, std::abs(fp[k] - kfp[k]));
            if (fd <= 1e-4) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) basins.push_back({c.X, c.r});
    }
    return basins;
}

}  // namespace cassonlin
