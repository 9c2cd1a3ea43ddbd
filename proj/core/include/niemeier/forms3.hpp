#pragma once

// Weight-12 forms of degree 3 recovered from four theta series, and the theta
// series expressions of degrees 1-3 in terms of the Coxeter number h.

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "niemeier/fourier.hpp"
#include "niemeier/polynomial.hpp"

namespace niemeier {

struct CoefficientPolynomials {
    Polynomial c0;  ///< 24(h - 30)
    Polynomial c1;  ///< 48(h - 30)^2
    Polynomial c2;  ///< 24(h - 30)(2h^2 + 48h + 1571)
};
const CoefficientPolynomials& coefficient_polynomials();

struct CoefficientValues {
    BigInt c0, c1, c2;
    friend bool operator==(const CoefficientValues&, const CoefficientValues&) = default;
};
CoefficientValues coefficient_values(std::int64_t h);

struct Degree3Basis {
    FourierExpansion e4cubed;
    FourierExpansion y12;
    FourierExpansion x12;
    FourierExpansion f12;
};

struct Anchor {
    std::int64_t h;
    FourierExpansion theta;
};

/// Solves theta_i = E + c0(h_i) Y + c1(h_i) X + c2(h_i) F per index for (Y, X, F),
/// with E = theta of Coxeter number 30. Throws std::runtime_error on a
/// non-integral solution and std::invalid_argument on repeated h.
Degree3Basis solve_degree3_basis(const FourierExpansion& theta_h30, const std::vector<Anchor>& others);

/// Anchors gamma (30), omega (0), psi (2), alpha (46).
Degree3Basis solve_degree3_basis(const FourierExpansion& theta_gamma, const FourierExpansion& theta_omega,
                                 const FourierExpansion& theta_psi, const FourierExpansion& theta_alpha);

/// (E4)^3 + (24h - 720) Delta on norms 0..max_n.
FourierExpansion theta1_via_formula(std::int64_t h, std::int64_t max_n);
/// (E4^(2))^3 + c0(h) Y12 + c1(h) X12 on `box`.
FourierExpansion theta2_via_formula(std::int64_t h, const Box& box);
/// basis.e4cubed + c0(h) y12 + c1(h) x12 + c2(h) f12 on `box`.
FourierExpansion theta3_via_formula(std::int64_t h, const Degree3Basis& basis, const Box& box);

/// ell_j(x) = prod_{m != j} (x - x_m) / (x_j - x_m).
Rational lagrange_weight(std::int64_t x, const std::vector<std::int64_t>& nodes, std::size_t j);

/// sum_j ell_j(h) theta_j on the common box. Throws on repeated h_j.
FourierExpansion lagrange_reconstruct(std::int64_t h, const std::vector<Anchor>& anchors);

struct Rederivation {
    // diagonal restrictions at (1,1)
    Rational e4cubed2, y2, x2;
    // diagonal restrictions at (1,1,1)
    Rational e4cubed3, y3, x3, f3;
    Polynomial c1;
    Polynomial c2;
};

/// Solves (24h)^2 = e4cubed2 + y2 (24h - 720) + x2 c1 and
/// (24h)^3 = e4cubed3 + y3 c0 + x3 c1 + f3 c2 for c1, c2 as polynomials in h.
Rederivation rederive_c_coefficients(const FourierExpansion& e4cubed2, const FourierExpansion& y2,
                                     const FourierExpansion& x2, const Degree3Basis& basis);

/// Rows: name, symbol, components, h, c0, c1, c2.
nlohmann::json table1_json();

} // namespace niemeier
