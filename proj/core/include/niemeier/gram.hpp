#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "niemeier/exactmath.hpp"
#include "niemeier/linalg.hpp"

namespace niemeier {

/// Symmetric integer Gram matrix of a lattice basis, row-major.
class GramMatrix {
public:
    GramMatrix() = default;
    /// Throws std::invalid_argument unless `entries` is a symmetric dim x dim matrix.
    GramMatrix(std::size_t dim, std::vector<std::int64_t> entries);
    static GramMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    /// Throws std::overflow_error when an entry does not fit in 64 bits.
    static GramMatrix from_int_matrix(const IntMatrix& m);

    std::size_t dim() const { return dim_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    std::span<const std::int64_t> row(std::size_t i) const { return {entries_.data() + i * dim_, dim_}; }
    const std::vector<std::int64_t>& entries() const { return entries_; }
    std::vector<std::vector<std::int64_t>> rows() const;

    IntMatrix to_int_matrix() const;

    bool is_even() const;
    /// Sylvester's criterion, exact.
    bool is_positive_definite() const;
    BigInt determinant() const;

    /// x^T G y
    std::int64_t inner(std::span<const std::int32_t> x, std::span<const std::int32_t> y) const;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::int64_t> entries_;
};

/// Block-diagonal sum.
GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);

/// Gram matrix (a, b/2; b/2, c) of the binary form written [a,b,c]. Requires
/// a, b, c even and the form positive definite.
GramMatrix binary_form(std::int64_t a, std::int64_t b, std::int64_t c);

/// U G U^T for a square integer matrix U (rows are new basis vectors).
GramMatrix conjugate(const GramMatrix& gram, const IntMatrix& transform);

} // namespace niemeier
