#include "niemeier/gram.hpp"

#include <stdexcept>
#include <string>

namespace niemeier {

GramMatrix::GramMatrix(std::size_t dim, std::vector<std::int64_t> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("GramMatrix: expected " + std::to_string(dim_ * dim_) + " entries");
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                throw std::invalid_argument("GramMatrix: not symmetric");
            }
        }
    }
}

GramMatrix GramMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::int64_t> flat;
    for (const auto& r : rows) {
        if (r.size() != rows.size()) {
            throw std::invalid_argument("GramMatrix: rows must form a square matrix");
        }
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return GramMatrix(rows.size(), std::move(flat));
}

GramMatrix GramMatrix::from_int_matrix(const IntMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("GramMatrix: matrix is not square");
    }
    std::vector<std::int64_t> flat;
    flat.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_slong_p()) {
                throw std::overflow_error("GramMatrix: entry exceeds 64 bits");
            }
            flat.push_back(m(i, j).get_si());
        }
    }
    return GramMatrix(m.rows(), std::move(flat));
}

std::vector<std::vector<std::int64_t>> GramMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        out[i].assign(row(i).begin(), row(i).end());
    }
    return out;
}

IntMatrix GramMatrix::to_int_matrix() const {
    IntMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m(i, j) = static_cast<long>((*this)(i, j));
        }
    }
    return m;
}

bool GramMatrix::is_even() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        if ((*this)(i, i) % 2 != 0) {
            return false;
        }
    }
    return true;
}

bool GramMatrix::is_positive_definite() const {
    // Leading principal minors via fraction-free elimination: the k-th pivot is
    // the k-th leading minor.
    IntMatrix a = to_int_matrix();
    BigInt previous = 1;
    for (std::size_t k = 0; k < dim_; ++k) {
        if (a(k, k) <= 0) {
            return false;
        }
        for (std::size_t i = k + 1; i < dim_; ++i) {
            for (std::size_t j = k + 1; j < dim_; ++j) {
                BigInt v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = v;
            }
        }
        previous = a(k, k);
    }
    return true;
}

BigInt GramMatrix::determinant() const { return niemeier::determinant(to_int_matrix()); }

std::int64_t GramMatrix::inner(std::span<const std::int32_t> x, std::span<const std::int32_t> y) const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) {
            continue;
        }
        std::int64_t gy = 0;
        for (std::size_t j = 0; j < dim_; ++j) {
            gy += (*this)(i, j) * y[j];
        }
        total += x[i] * gy;
    }
    return total;
}

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<std::int64_t> flat(n * n, 0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            flat[i * n + j] = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            flat[(a.dim() + i) * n + a.dim() + j] = b(i, j);
        }
    }
    return GramMatrix(n, std::move(flat));
}

GramMatrix binary_form(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a % 2 != 0 || b % 2 != 0 || c % 2 != 0) {
        throw std::invalid_argument("binary_form: [a,b,c] must have even entries");
    }
    GramMatrix g = GramMatrix::from_rows({{a, b / 2}, {b / 2, c}});
    if (!g.is_positive_definite()) {
        throw std::invalid_argument("binary_form: form is not positive definite");
    }
    return g;
}

GramMatrix conjugate(const GramMatrix& gram, const IntMatrix& transform) {
    if (transform.cols() != gram.dim()) {
        throw std::invalid_argument("conjugate: shape mismatch");
    }
    return GramMatrix::from_int_matrix(transform * gram.to_int_matrix() * transform.transpose());
}

} // namespace niemeier
