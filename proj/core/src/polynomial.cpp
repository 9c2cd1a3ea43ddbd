#include "niemeier/polynomial.hpp"

#include <algorithm>

namespace niemeier {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& rhs) {
    for (auto& c : coeffs_) {
        c /= rhs;
    }
    return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag == Rational(1);
        if (!unit || i == 0) {
            out += mag.to_string();
        }
        if (i >= 1) {
            out += var;
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace niemeier
