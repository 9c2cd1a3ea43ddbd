#pragma once

// Dense exact linear algebra over Z and Q: Bareiss determinants, row Hermite
// normal form, Gram-matrix LLL reduction and rational linear solves.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "niemeier/exactmath.hpp"

namespace niemeier {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("Matrix product: shape mismatch");
        }
        Matrix c(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

BigInt determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of
/// `generators`. Returns only the nonzero rows (a basis of the row lattice).
IntMatrix hermite_normal_form(IntMatrix generators);

struct LllResult {
    IntMatrix gram;       ///< transform * input * transform^T
    IntMatrix transform;  ///< unimodular, rows are the new basis in old coordinates
};

/// LLL reduction of a positive definite integral Gram matrix (exact arithmetic).
LllResult lll_reduce_gram(const IntMatrix& gram, const Rational& delta = Rational(BigInt(99), BigInt(100)));

/// Solves A x = b exactly; nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b);

/// Nearest integer, ties rounded up.
BigInt round_nearest(const Rational& x);

} // namespace niemeier
