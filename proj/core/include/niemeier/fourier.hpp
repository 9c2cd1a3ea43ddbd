#pragma once

// Truncated Fourier expansions F = sum a(F;T) q^T over explicit finite boxes.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "niemeier/exactmath.hpp"
#include "niemeier/index_matrix.hpp"

namespace niemeier {

/// Raised when a coefficient outside the covered box is requested.
class CoverageError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class FourierExpansion {
public:
    FourierExpansion() = default;
    FourierExpansion(int degree, Rational weight);

    int degree() const { return degree_; }
    const Rational& weight() const { return weight_; }

    void set(const IndexMatrix& t, Rational value);
    bool covers(const IndexMatrix& t) const { return coeffs_.contains(t); }
    /// Throws CoverageError outside the box.
    const Rational& at(const IndexMatrix& t) const;

    Box box() const;
    std::size_t size() const { return coeffs_.size(); }
    const std::map<IndexMatrix, Rational>& coefficients() const { return coeffs_; }

    /// Copy restricted to `box`; throws CoverageError if not covered.
    FourierExpansion restricted(const Box& box) const;
    bool is_integral() const;

    friend FourierExpansion operator+(const FourierExpansion& a, const FourierExpansion& b);
    friend FourierExpansion operator-(const FourierExpansion& a, const FourierExpansion& b);
    friend FourierExpansion operator*(const Rational& c, const FourierExpansion& f);

    friend bool operator==(const FourierExpansion&, const FourierExpansion&) = default;

private:
    int degree_ = 0;
    Rational weight_;
    std::map<IndexMatrix, Rational> coeffs_;
};

/// floor((4/3)^n k / 16)
std::int64_t sturm_bound(int degree, std::int64_t weight);
Box sturm_box(int degree, std::int64_t weight);

/// Smallest diagonal box containing every T1 with 0 <= T1 <= T for T in `box`.
Box down_closure(const Box& box);

/// a(PhiF; T') = a(F; T' extended by zeros), on every T' whose extension is covered.
FourierExpansion siegel_operator(const FourierExpansion& f);

/// a(Theta F; T) = det(T) a(F; T).
FourierExpansion theta_operator(const FourierExpansion& f);

/// Truncated product on `box`. Throws CoverageError if an input coefficient is missing.
FourierExpansion multiply(const FourierExpansion& f, const FourierExpansion& g, const Box& box);

struct ResidueMismatch {
    IndexMatrix t;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

/// Indices in `box` where the residues mod m differ. Throws std::domain_error on a
/// coefficient that is not m-integral and CoverageError on missing coefficients.
std::vector<ResidueMismatch> congruent_mod(const FourierExpansion& f, const FourierExpansion& g, std::int64_t m,
                                           const Box& box);

/// Sum of a(F;T) over all positive semidefinite T with the given diagonal.
Rational diagonal_restriction_coeff(const FourierExpansion& f, std::span<const std::int64_t> diagonal);

/// Integers that fit in 64 bits are written as numbers, others as decimal strings.
nlohmann::json rational_part_json(const BigInt& value);
nlohmann::json to_json(const FourierExpansion& f);
FourierExpansion expansion_from_json(const nlohmann::json& j);

} // namespace niemeier
