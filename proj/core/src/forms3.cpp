#include "niemeier/forms3.hpp"

#include <set>
#include <stdexcept>

#include "niemeier/eisenstein.hpp"
#include "niemeier/lattices.hpp"
#include "niemeier/linalg.hpp"

namespace niemeier {

namespace {

Polynomial linear(long a, long b) { return Polynomial({Rational(b), Rational(a)}); }  // a h + b

std::vector<std::int64_t> ones(std::size_t n) { return std::vector<std::int64_t>(n, 1); }

void require_distinct(const std::vector<std::int64_t>& hs) {
    if (std::set<std::int64_t>(hs.begin(), hs.end()).size() != hs.size()) {
        throw std::invalid_argument("anchor Coxeter numbers must be pairwise distinct");
    }
}

} // namespace

const CoefficientPolynomials& coefficient_polynomials() {
    static const CoefficientPolynomials p = [] {
        const Polynomial hm30 = linear(1, -30);
        CoefficientPolynomials c;
        c.c0 = Rational(24) * hm30;
        c.c1 = Rational(48) * hm30 * hm30;
        c.c2 = Rational(24) * hm30 * Polynomial({Rational(1571), Rational(48), Rational(2)});
        return c;
    }();
    return p;
}

CoefficientValues coefficient_values(std::int64_t h) {
    const auto& p = coefficient_polynomials();
    const Rational x(static_cast<long>(h));
    return {p.c0(x).to_integer(), p.c1(x).to_integer(), p.c2(x).to_integer()};
}

Degree3Basis solve_degree3_basis(const FourierExpansion& theta_h30, const std::vector<Anchor>& others) {
    if (others.size() != 3) {
        throw std::invalid_argument("solve_degree3_basis: three anchors besides h = 30 are needed");
    }
    std::vector<std::int64_t> hs{30};
    for (const auto& a : others) {
        hs.push_back(a.h);
    }
    require_distinct(hs);
    const Rational w(12);
    Degree3Basis basis{theta_h30, FourierExpansion(theta_h30.degree(), w), FourierExpansion(theta_h30.degree(), w),
                       FourierExpansion(theta_h30.degree(), w)};
    RatMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const CoefficientValues c = coefficient_values(others[i].h);
        m(i, 0) = Rational(c.c0);
        m(i, 1) = Rational(c.c1);
        m(i, 2) = Rational(c.c2);
    }
    for (const auto& [t, e] : theta_h30.coefficients()) {
        std::vector<Rational> rhs;
        for (const auto& a : others) {
            rhs.push_back(a.theta.at(t) - e);
        }
        const auto sol = solve_linear(m, std::move(rhs));
        if (!sol) {
            throw std::logic_error("solve_degree3_basis: singular system");
        }
        for (const auto& v : *sol) {
            if (!v.is_integer()) {
                throw std::runtime_error("solve_degree3_basis: non-integral coefficient " + v.to_string() + " at " +
                                         t.bracket_string());
            }
        }
        basis.y12.set(t, (*sol)[0]);
        basis.x12.set(t, (*sol)[1]);
        basis.f12.set(t, (*sol)[2]);
    }
    return basis;
}

Degree3Basis solve_degree3_basis(const FourierExpansion& theta_gamma, const FourierExpansion& theta_omega,
                                 const FourierExpansion& theta_psi, const FourierExpansion& theta_alpha) {
    return solve_degree3_basis(theta_gamma, {{0, theta_omega}, {2, theta_psi}, {46, theta_alpha}});
}

FourierExpansion theta1_via_formula(std::int64_t h, std::int64_t max_n) {
    Box box;
    for (std::int64_t n = 0; n <= max_n; ++n) {
        box.push_back(IndexMatrix::of(n));
    }
    const CoefficientValues c = coefficient_values(h);
    return e4_cubed(box) + Rational(c.c0) * delta_deg1(max_n);
}

FourierExpansion theta2_via_formula(std::int64_t h, const Box& box) {
    const CoefficientValues c = coefficient_values(h);
    return e4_cubed(box) + Rational(c.c0) * igusa_Y12_deg2(box) + Rational(c.c1) * igusa_X12_deg2(box);
}

FourierExpansion theta3_via_formula(std::int64_t h, const Degree3Basis& basis, const Box& box) {
    const CoefficientValues c = coefficient_values(h);
    return basis.e4cubed.restricted(box) + Rational(c.c0) * basis.y12.restricted(box) +
           Rational(c.c1) * basis.x12.restricted(box) + Rational(c.c2) * basis.f12.restricted(box);
}

Rational lagrange_weight(std::int64_t x, const std::vector<std::int64_t>& nodes, std::size_t j) {
    Rational w(1);
    for (std::size_t m = 0; m < nodes.size(); ++m) {
        if (m != j) {
            w *= Rational(static_cast<long>(x - nodes[m])) / Rational(static_cast<long>(nodes[j] - nodes[m]));
        }
    }
    return w;
}

FourierExpansion lagrange_reconstruct(std::int64_t h, const std::vector<Anchor>& anchors) {
    if (anchors.empty()) {
        throw std::invalid_argument("lagrange_reconstruct: no anchors");
    }
    std::vector<std::int64_t> nodes;
    for (const auto& a : anchors) {
        nodes.push_back(a.h);
    }
    require_distinct(nodes);
    FourierExpansion out = lagrange_weight(h, nodes, 0) * anchors[0].theta;
    for (std::size_t j = 1; j < anchors.size(); ++j) {
        out = out + lagrange_weight(h, nodes, j) * anchors[j].theta;
    }
    return out;
}

Rederivation rederive_c_coefficients(const FourierExpansion& e4cubed2, const FourierExpansion& y2,
                                     const FourierExpansion& x2, const Degree3Basis& basis) {
    Rederivation r;
    const auto d2 = ones(2);
    const auto d3 = ones(3);
    r.e4cubed2 = diagonal_restriction_coeff(e4cubed2, d2);
    r.y2 = diagonal_restriction_coeff(y2, d2);
    r.x2 = diagonal_restriction_coeff(x2, d2);
    r.e4cubed3 = diagonal_restriction_coeff(basis.e4cubed, d3);
    r.y3 = diagonal_restriction_coeff(basis.y12, d3);
    r.x3 = diagonal_restriction_coeff(basis.x12, d3);
    r.f3 = diagonal_restriction_coeff(basis.f12, d3);
    if (r.x2.is_zero() || r.f3.is_zero()) {
        throw std::runtime_error("rederive_c_coefficients: vanishing leading constant");
    }
    const Polynomial roots = linear(24, 0);  // 24h
    const Polynomial c0 = linear(24, -720);
    r.c1 = (roots * roots - Polynomial::constant(r.e4cubed2) - r.y2 * c0) / r.x2;
    r.c2 = (roots * roots * roots - Polynomial::constant(r.e4cubed3) - r.y3 * c0 - r.x3 * r.c1) / r.f3;
    return r;
}

nlohmann::json table1_json() {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& name : niemeier_names()) {
        const std::int64_t h = catalog_coxeter_number(name);
        const CoefficientValues c = coefficient_values(h);
        rows.push_back({
            {"name", name},
            {"symbol", catalog_symbol(name)},
            {"components", components_label(catalog_components(name))},
            {"h", h},
            {"c0", rational_part_json(c.c0)},
            {"c1", rational_part_json(c.c1)},
            {"c2", rational_part_json(c.c2)},
        });
    }
    return rows;
}

} // namespace niemeier
