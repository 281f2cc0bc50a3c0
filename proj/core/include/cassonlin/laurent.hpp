#pragma once

// Exact Laurent polynomials over Q, just enough for Burau matrices and the
// Alexander polynomial: ring operations, exact division, evaluation at a
// nonzero rational.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cassonlin {

using Rational = mpq_class;

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) { *this = monomial(c, 0); }

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(const Rational& c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int lowest() const;   // exponent of the lowest term; 0 for the zero poly
    int highest() const;  // exponent of the highest term; 0 for the zero poly
    Rational coeff(int power) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const;

    // Exact quotient; throws std::domain_error if the division leaves a
    // remainder or the divisor is zero.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // Value at a nonzero rational point.
    Rational eval(const Rational& t) const;

    std::string to_string() const;  // e.g. "-t^-1 + 3 - t"

  private:
    void trim();

    // coeffs_[k] is the coefficient of t^(low_ + k); empty vector = 0.
    int low_ = 0;
    std::vector<Rational> coeffs_;
};

}  // namespace cassonlin
