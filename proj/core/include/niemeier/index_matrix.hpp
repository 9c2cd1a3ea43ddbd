#pragma once

// Half-integral symmetric matrices T (degree n <= 3) indexing Fourier
// coefficients. Stored integrally: the diagonal t_ii and b_ij = 2 t_ij.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "niemeier/exactmath.hpp"

namespace niemeier {

class IndexMatrix {
public:
    static constexpr int kMaxDegree = 3;

    IndexMatrix() = default;  ///< the degree-0 (empty) matrix

    static IndexMatrix zero(int degree);
    static IndexMatrix of(std::int64_t t11);
    static IndexMatrix of(std::int64_t t11, std::int64_t t22, std::int64_t b12);
    static IndexMatrix of(std::int64_t t11, std::int64_t t22, std::int64_t t33, std::int64_t b12, std::int64_t b13,
                          std::int64_t b23);

    /// Bracket notation [a,b,c] = (a b/2; b/2 c).
    static IndexMatrix bracket(std::int64_t a, std::int64_t b, std::int64_t c);
    /// Bracket notation [a,b,c;d,e,f]: diagonal (a,b,c), 2t23 = d, 2t13 = e, 2t12 = f.
    static IndexMatrix bracket(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                               std::int64_t f);

    /// Inverse of encoding(): diagonal entries followed by b_ij for i < j.
    static IndexMatrix from_encoding(int degree, std::span<const std::int64_t> encoding);
    /// Accepts "[a,b,c]", "[a,b,c;d,e,f]", "[t]" or a bare encoding "t11,t22,b12".
    static IndexMatrix parse(std::string_view text);

    int degree() const { return degree_; }
    std::int64_t t(int i) const { return diag_[static_cast<std::size_t>(i)]; }
    /// Entry of 2T: 2 t_ii on the diagonal, b_ij off it.
    std::int64_t twice(int i, int j) const;
    std::int64_t trace() const;

    std::vector<std::int64_t> encoding() const;
    std::string encoding_string() const;  ///< "t11,t22,t33,b12,b13,b23"
    std::string bracket_string() const;   ///< "[a,b,c;d,e,f]"

    bool is_psd() const;
    int rank() const;
    BigInt det_twice() const;  ///< det(2T), an integer
    Rational det() const;      ///< det(T) = det(2T) / 2^n

    /// Appends a zero row and column.
    IndexMatrix extended() const;
    /// True when the last row and column vanish.
    bool last_row_zero() const;
    /// Drops the last row and column.
    IndexMatrix truncated() const;

    /// Simultaneous permutation of rows/columns: result(i,j) = this(perm[i], perm[j]).
    IndexMatrix permuted(std::span<const int> perm) const;
    /// Column sign changes: b_ij -> s_i s_j b_ij.
    IndexMatrix signed_by(std::span<const int> signs) const;
    /// Lexicographically least image under signed permutations.
    IndexMatrix signed_permutation_canonical() const;

    friend IndexMatrix operator+(const IndexMatrix& a, const IndexMatrix& b);
    friend IndexMatrix operator-(const IndexMatrix& a, const IndexMatrix& b);

    friend auto operator<=>(const IndexMatrix&, const IndexMatrix&) = default;
    friend bool operator==(const IndexMatrix&, const IndexMatrix&) = default;

private:
    static std::size_t off_index(int i, int j);

    int degree_ = 0;
    std::array<std::int64_t, 3> diag_{};
    std::array<std::int64_t, 3> off_{};  // b12, b13, b23
};

using Box = std::vector<IndexMatrix>;

/// All positive semidefinite T of the given degree with the given diagonal.
Box psd_with_diagonal(std::span<const std::int64_t> diagonal);

/// All positive semidefinite T with t_ii <= max_diag[i]; sorted.
Box diagonal_box(std::span<const std::int64_t> max_diag);
Box diagonal_box(int degree, std::int64_t max_diag);

/// Sorts and deduplicates.
void normalize_box(Box& box);
bool box_contains(const Box& sorted_box, const IndexMatrix& t);

} // namespace niemeier
