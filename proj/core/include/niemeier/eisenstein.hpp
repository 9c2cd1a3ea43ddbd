#pragma once

// Siegel-Eisenstein series of degrees 1 and 2, Delta, and the degree-2 Igusa
// generators X12, Y12 as rational combinations of E4^3, E6^2, E12.

#include <cstdint>

#include "niemeier/exactmath.hpp"
#include "niemeier/fourier.hpp"

namespace niemeier {

/// Cohen's function H(r, N). Memoized; thread safe.
Rational cohen_H(int r, std::int64_t N);

/// Degree-1 Eisenstein series, a(0) = 1, coefficients n = 0..max_n.
FourierExpansion eisenstein_deg1(int k, std::int64_t max_n);
FourierExpansion delta_deg1(std::int64_t max_n);

/// 2 / (zeta(1-k) zeta(3-2k)).
Rational deg2_normalization_closed_form(int k);

/// Rank-2 normalization constants of E_k^(2) fixed by data: c4 from the
/// enumerated E8 pair count at [1,1,1], c6 and c12 from a(Y12;[1,1,1]) = 116 and
/// a(Y12;[1,0,1]) = 1206.
struct Deg2Normalization {
    Rational c4;
    Rational c6;
    Rational c12;
    std::uint64_t e8_anchor = 0;  ///< enumerated a(theta_E8; [1,1,1])

    const Rational& for_weight(int k) const;
};

/// Computed once per process.
const Deg2Normalization& deg2_normalization();

/// a(E_k^(2); T) given the rank-2 constant c_k.
Rational eisenstein_deg2_coefficient(int k, const Rational& ck, const IndexMatrix& t);

FourierExpansion eisenstein_deg2(int k, const Box& box, const Rational& ck);
FourierExpansion eisenstein_deg2(int k, const Box& box);

struct IgusaConstants {
    Rational a1, a2, a3;
    Rational b1, b2, b3;
};
const IgusaConstants& igusa_constants();

/// (E4^(n))^3 for n = 1, 2 on `box`.
FourierExpansion e4_cubed(const Box& box);

/// Throw std::runtime_error on a non-integral coefficient.
FourierExpansion igusa_X12_deg2(const Box& box);
FourierExpansion igusa_Y12_deg2(const Box& box);

} // namespace niemeier
