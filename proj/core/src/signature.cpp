#include "cassonlin/signature.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace cassonlin {

namespace {

struct Loop {
    int col;     // generator index i: the loop runs between disks i and i+1
    int p, q;    // word positions of its two bands, p < q
    int s1, s2;  // signs of those bands
};

// Chirality conventions for the linking rules, pinned so that
// signature_of(sigma_1^3) = -2 and so that |det(V + V^T)| matches the
// Burau determinant |Delta(-1)| across the corpus.
constexpr int kSharedBandSign = +1;  // symmetrized same-column entry = sign of shared band
constexpr int kLowColFirst = -1;     // interleave, column-i loop starts first
constexpr int kHighColFirst = +1;    // interleave, column-(i+1) loop starts first

}  // namespace

SeifertMatrix seifert_matrix(const BraidWord& braid) {
    if (!is_knot(braid)) throw NotAKnotError("closure of " + to_text(braid) + " is not a knot");
    const BraidWord b = free_reduce(braid);
    const int n = b.strands;
    const int len = static_cast<int>(b.letters.size());

    std::vector<std::vector<int>> pos(n);  // pos[i] = positions of letters +-i, i in 1..n-1
    for (int k = 0; k < len; ++k) pos[std::abs(b.letters[k])].push_back(k);

    std::vector<Loop> loops;
    loops.reserve(len - n + 1);
    for (int i = 1; i < n; ++i)
        for (std::size_t j = 0; j + 1 < pos[i].size(); ++j) {
            const int p = pos[i][j], q = pos[i][j + 1];
            loops.push_back({i, p, q, b.letters[p] > 0 ? 1 : -1, b.letters[q] > 0 ? 1 : -1});
        }

    const int m = static_cast<int>(loops.size());
    SeifertMatrix V;
    V.entries.assign(m, std::vector<int>(m, 0));

    for (int r = 0; r < m; ++r) {
        const Loop& L = loops[r];
        V.entries[r][r] = -(L.s1 + L.s2) / 2;
        for (int c = r + 1; c < m; ++c) {
            const Loop& M = loops[c];
            if (M.col == L.col && M.p == L.q) {
                // Consecutive loops sharing the band at L.q; the symmetrized
                // entry is the sign of the shared band (up to the global
                // chirality constant), placed on one side only.
                const int t = L.s2;
                if (t > 0)
                    V.entries[r][c] = kSharedBandSign * t;
                else
                    V.entries[c][r] = kSharedBandSign * t;
            } else if (M.col == L.col + 1) {
                // Loops on adjacent columns link once when their spans
                // interleave (their chords on the shared disk cross).
                if (L.p < M.p && M.p < L.q && L.q < M.q)
                    V.entries[r][c] = kLowColFirst;
                else if (M.p < L.p && L.p < M.q && M.q < L.q)
                    V.entries[c][r] = kHighColFirst;
            }
        }
    }
    return V;
}

namespace {

std::vector<std::vector<long long>> symmetrize(const SeifertMatrix& V) {
    const int m = V.size();
    std::vector<std::vector<long long>> s(m, std::vector<long long>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            s[r][c] = static_cast<long long>(V.entries[r][c]) + V.entries[c][r];
    return s;
}

// Congruence diagonalization over Q.  Returns the pivot list; the product
// of the pivots is det(S) exactly (all congruence steps are unimodular).
std::vector<mpq_class> congruence_pivots(const std::vector<std::vector<long long>>& in) {
    const int m = static_cast<int>(in.size());
    std::vector<std::vector<mpq_class>> s(m, std::vector<mpq_class>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) s[r][c] = static_cast<long>(in[r][c]);

    std::vector<mpq_class> pivots;
    for (int k = 0; k < m; ++k) {
        if (s[k][k] == 0) {
            for (int l = k + 1; l < m; ++l)
                if (s[l][l] != 0) {
                    std::swap(s[k], s[l]);
                    for (int r = 0; r < m; ++r) std::swap(s[r][k], s[r][l]);
                    break;
                }
        }
        if (s[k][k] == 0) {
            for (int l = k + 1; l < m; ++l)
                if (s[k][l] != 0) {
                    // Row/column addition makes the diagonal entry 2*s[k][l].
                    for (int c = 0; c < m; ++c) s[k][c] += s[l][c];
                    for (int r = 0; r < m; ++r) s[r][k] += s[r][l];
                    break;
                }
        }
        const mpq_class p = s[k][k];
        pivots.push_back(p);
        if (p == 0) continue;  // entire remaining block is zero in this row/col
        for (int r = k + 1; r < m; ++r) {
            if (s[r][k] == 0) continue;
            const mpq_class f = s[r][k] / p;
            for (int c = k; c < m; ++c) s[r][c] -= f * s[k][c];
            for (int c = k; c < m; ++c) s[c][r] = s[r][c];
        }
    }
    return pivots;
}

}  // namespace

int symmetric_signature(const std::vector<std::vector<long long>>& s) {
    int sig = 0;
    for (const auto& p : congruence_pivots(s)) {
        if (p > 0) ++sig;
        if (p < 0) --sig;
    }
    return sig;
}

long long symmetric_abs_det(const std::vector<std::vector<long long>>& s) {
    mpq_class det = 1;
    for (const auto& p : congruence_pivots(s)) det *= p;
    if (det < 0) det = -det;
    det.canonicalize();
    if (det.get_den() != 1) throw std::logic_error("integer determinant expected");
    const mpz_class num = det.get_num();
    if (!num.fits_slong_p()) throw std::overflow_error("determinant exceeds long long");
    return static_cast<long long>(num.get_si());
}

int signature_of(const BraidWord& b) { return symmetric_signature(symmetrize(seifert_matrix(b))); }

long long determinant_of(const BraidWord& b) {
    return symmetric_abs_det(symmetrize(seifert_matrix(b)));
}

}  // namespace cassonlin
