#include "cassonlin/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace cassonlin {

LaurentPoly LaurentPoly::monomial(const Rational& c, int power) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = power;
        p.coeffs_ = {c};
    }
    return p;
}

int LaurentPoly::lowest() const { return coeffs_.empty() ? 0 : low_; }

int LaurentPoly::highest() const {
    return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(int power) const {
    const int k = power - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    low_ += static_cast<int>(lead);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    LaurentPoly r;
    r.low_ = std::min(low_, o.low_);
    const int hi = std::max(highest(), o.highest());
    r.coeffs_.assign(hi - r.low_ + 1, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[low_ - r.low_ + k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        r.coeffs_[o.low_ - r.low_ + k] += o.coeffs_[k];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    LaurentPoly r;
    r.low_ = low_ + o.low_;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return low_ == o.low_ && coeffs_ == o.coeffs_;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const Rational lead = divisor.coeffs_.back();
    const int dhi = divisor.highest();
    // Ordinary long division on the shifted polynomials, highest term first.
    while (!rem.is_zero() && rem.highest() - rem.lowest() >= dhi - divisor.lowest()) {
        const Rational c = rem.coeffs_.back() / lead;
        const int shift = rem.highest() - dhi;
        const LaurentPoly term = monomial(c, shift);
        quot = quot + term;
        rem = rem - term * divisor;
    }
    if (!rem.is_zero()) throw std::domain_error("polynomial division left a remainder");
    return quot;
}

Rational LaurentPoly::eval(const Rational& t) const {
    if (t == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at t = 0");
    if (is_zero()) return 0;
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    // Multiply by t^low_.
    Rational p = 1;
    const int e = low_ < 0 ? -low_ : low_;
    const Rational base = low_ < 0 ? Rational(1) / t : t;
    for (int k = 0; k < e; ++k) p *= base;
    return acc * p;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const int power = low_ + static_cast<int>(k);
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (a != 1 || power == 0) out << a.get_str();
        if (power != 0) {
            if (a != 1) out << '*';
            out << 't';
            if (power != 1) out << '^' << power;
        }
    }
    return out.str();
}

}  // namespace cassonlin
