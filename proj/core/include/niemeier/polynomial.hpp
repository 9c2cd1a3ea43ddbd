#pragma once

#include <string>
#include <vector>

#include "niemeier/exactmath.hpp"

namespace niemeier {

/// Univariate polynomial with exact rational coefficients; coefficient i
/// multiplies x^i. Trailing zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial constant(const Rational& c);
    static Polynomial variable();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& rhs);
    Polynomial& operator/=(const Rational& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
    friend Polynomial operator*(const Rational& a, Polynomial b) { return b *= a; }
    friend Polynomial operator/(Polynomial a, const Rational& b) { return a /= b; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// e.g. "48h^2 - 2880h + 43200"
    std::string to_string(const std::string& var = "h") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace niemeier
