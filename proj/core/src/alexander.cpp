#include "cassonlin/alexander.hpp"

#include <stdexcept>

namespace cassonlin {

namespace {

BurauMatrix identity(int m) {
    BurauMatrix I(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i) I[i][i] = LaurentPoly::one();
    return I;
}

BurauMatrix matmul(const BurauMatrix& a, const BurauMatrix& b) {
    const int m = static_cast<int>(a.size());
    BurauMatrix r(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
            }
        }
    return r;
}

// Reduced Burau matrix of sigma_i^{+-1} in B_n, acting on C^{n-1}.
//
// sigma_i differs from the identity in the rows/columns (i-1, i, i+1)
// (1-based, clipped at the edges):
//
//   [ 1   t   0 ]          [ 1    1      0 ]
//   [ 0  -t   0 ]   inverse [ 0  -t^-1    0 ]
//   [ 0   1   1 ]          [ 0   t^-1    1 ]
BurauMatrix generator(int n, int letter) {
    const int m = n - 1;
    const int i = std::abs(letter);
    BurauMatrix g = identity(m);
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
    const LaurentPoly one = LaurentPoly::one();
    const int r = i - 1;  // 0-based row of the -t (resp. -t^-1) pivot
    if (letter > 0) {
        g[r][r] = -t;
        if (r - 1 >= 0) g[r - 1][r] = t;
        if (r + 1 < m) g[r + 1][r] = one;
    } else {
        g[r][r] = -tinv;
        if (r - 1 >= 0) g[r - 1][r] = one;
        if (r + 1 < m) g[r + 1][r] = tinv;
    }
    return g;
}

LaurentPoly det(const BurauMatrix& a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return LaurentPoly::one();
    if (m == 1) return a[0][0];
    // Laplace expansion along the first row; matrices here are at most 4x4.
    LaurentPoly d;
    for (int j = 0; j < m; ++j) {
        if (a[0][j].is_zero()) continue;
        BurauMatrix minor(m - 1, std::vector<LaurentPoly>(m - 1));
        for (int r = 1; r < m; ++r) {
            int cc = 0;
            for (int c = 0; c < m; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        const LaurentPoly term = a[0][j] * det(minor);
        d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
}

}  // namespace

BurauMatrix reduced_burau(const BraidWord& b) {
    BurauMatrix m = identity(b.strands - 1);
    for (int e : b.letters) m = matmul(m, generator(b.strands, e));
    return m;
}

LaurentPoly alexander_polynomial(const BraidWord& b) {
    if (!is_knot(b)) throw NotAKnotError("closure of " + to_text(b) + " is not a knot");
    const int n = b.strands;
    const BurauMatrix bu = reduced_burau(b);
    BurauMatrix iminus = identity(n - 1);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) iminus[i][j] = iminus[i][j] - bu[i][j];
    const LaurentPoly d = det(iminus);
    // (1 - t^n) / (1 - t) = 1 + t + ... + t^{n-1}; the division below is
    // exact for knot words.
    LaurentPoly cyc;
    for (int k = 0; k < n; ++k) cyc = cyc + LaurentPoly::monomial(1, k);
    return d.divide_exact(cyc);
}

Rational alexander_at(const BraidWord& b, const Rational& t) {
    if (t == 0) throw std::invalid_argument("alexander_at requires t != 0");
    Rational v = alexander_polynomial(b).eval(t);
    if (v < 0) v = -v;
    return v;
}

}  // namespace cassonlin
