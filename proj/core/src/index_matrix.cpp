#include "niemeier/index_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "niemeier/linalg.hpp"

namespace niemeier {

namespace {

void check_degree(int degree) {
    if (degree < 0 || degree > IndexMatrix::kMaxDegree) {
        throw std::invalid_argument("IndexMatrix: degree must be in 0..3");
    }
}

IntMatrix twice_matrix(const IndexMatrix& t, std::span<const int> rows) {
    IntMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            m(i, j) = static_cast<long>(t.twice(rows[i], rows[j]));
        }
    }
    return m;
}

} // namespace

std::size_t IndexMatrix::off_index(int i, int j) {
    if (i > j) {
        std::swap(i, j);
    }
    if (i == 0 && j == 1) {
        return 0;
    }
    if (i == 0 && j == 2) {
        return 1;
    }
    return 2;
}

IndexMatrix IndexMatrix::zero(int degree) {
    check_degree(degree);
    IndexMatrix t;
    t.degree_ = degree;
    return t;
}

IndexMatrix IndexMatrix::of(std::int64_t t11) {
    IndexMatrix t = zero(1);
    t.diag_[0] = t11;
    return t;
}

IndexMatrix IndexMatrix::of(std::int64_t t11, std::int64_t t22, std::int64_t b12) {
    IndexMatrix t = zero(2);
    t.diag_ = {t11, t22, 0};
    t.off_ = {b12, 0, 0};
    return t;
}

IndexMatrix IndexMatrix::of(std::int64_t t11, std::int64_t t22, std::int64_t t33, std::int64_t b12, std::int64_t b13,
                            std::int64_t b23) {
    IndexMatrix t = zero(3);
    t.diag_ = {t11, t22, t33};
    t.off_ = {b12, b13, b23};
    return t;
}

IndexMatrix IndexMatrix::bracket(std::int64_t a, std::int64_t b, std::int64_t c) { return of(a, c, b); }

IndexMatrix IndexMatrix::bracket(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                                 std::int64_t f) {
    return of(a, b, c, f, e, d);
}

IndexMatrix IndexMatrix::from_encoding(int degree, std::span<const std::int64_t> enc) {
    check_degree(degree);
    const std::size_t expected = static_cast<std::size_t>(degree * (degree + 1) / 2);
    if (enc.size() != expected) {
        throw std::invalid_argument("IndexMatrix: encoding of degree " + std::to_string(degree) + " needs " +
                                    std::to_string(expected) + " entries");
    }
    IndexMatrix t = zero(degree);
    for (int i = 0; i < degree; ++i) {
        t.diag_[static_cast<std::size_t>(i)] = enc[static_cast<std::size_t>(i)];
    }
    std::size_t k = static_cast<std::size_t>(degree);
    for (int i = 0; i < degree; ++i) {
        for (int j = i + 1; j < degree; ++j) {
            t.off_[off_index(i, j)] = enc[k++];
        }
    }
    return t;
}

IndexMatrix IndexMatrix::parse(std::string_view text) {
    std::string s(text);
    const bool bracketed = !s.empty() && s.front() == '[';
    if (bracketed) {
        if (s.back() != ']') {
            throw std::invalid_argument("IndexMatrix::parse: unbalanced bracket in '" + s + "'");
        }
        s = s.substr(1, s.size() - 2);
    }
    std::replace(s.begin(), s.end(), ';', ',');
    std::vector<std::int64_t> values;
    std::string token;
    std::istringstream in(s);
    while (std::getline(in, token, ',')) {
        try {
            values.push_back(std::stoll(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("IndexMatrix::parse: bad entry '" + token + "' in '" + std::string(text) + "'");
        }
    }
    if (bracketed) {
        switch (values.size()) {
        case 0:
            return zero(0);
        case 1:
            return of(values[0]);
        case 3:
            return bracket(values[0], values[1], values[2]);
        case 6:
            return bracket(values[0], values[1], values[2], values[3], values[4], values[5]);
        default:
            break;
        }
        throw std::invalid_argument("IndexMatrix::parse: cannot read '" + std::string(text) + "'");
    }
    switch (values.size()) {
    case 1:
        return from_encoding(1, values);
    case 3:
        return from_encoding(2, values);
    case 6:
        return from_encoding(3, values);
    default:
        throw std::invalid_argument("IndexMatrix::parse: cannot read '" + std::string(text) + "'");
    }
}

std::int64_t IndexMatrix::twice(int i, int j) const {
    if (i == j) {
        return 2 * diag_[static_cast<std::size_t>(i)];
    }
    return off_[off_index(i, j)];
}

std::int64_t IndexMatrix::trace() const {
    return std::accumulate(diag_.begin(), diag_.begin() + degree_, std::int64_t{0});
}

std::vector<std::int64_t> IndexMatrix::encoding() const {
    std::vector<std::int64_t> out(diag_.begin(), diag_.begin() + degree_);
    for (int i = 0; i < degree_; ++i) {
        for (int j = i + 1; j < degree_; ++j) {
            out.push_back(off_[off_index(i, j)]);
        }
    }
    return out;
}

std::string IndexMatrix::encoding_string() const {
    std::string out;
    for (const auto v : encoding()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(v);
    }
    return out;
}

std::string IndexMatrix::bracket_string() const {
    std::ostringstream os;
    os << '[';
    switch (degree_) {
    case 1:
        os << diag_[0];
        break;
    case 2:
        os << diag_[0] << ',' << off_[0] << ',' << diag_[1];
        break;
    case 3:
        os << diag_[0] << ',' << diag_[1] << ',' << diag_[2] << ';' << off_[2] << ',' << off_[1] << ',' << off_[0];
        break;
    default:
        break;
    }
    os << ']';
    return os.str();
}

bool IndexMatrix::is_psd() const {
    // Every principal minor of 2T must be non-negative.
    const int n = degree_;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> rows;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) {
                rows.push_back(i);
            }
        }
        if (determinant(twice_matrix(*this, rows)) < 0) {
            return false;
        }
    }
    return true;
}

int IndexMatrix::rank() const {
    const int n = degree_;
    for (int size = n; size > 0; --size) {
        for (int mask = 1; mask < (1 << n); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != size) {
                continue;
            }
            for (int cmask = 1; cmask < (1 << n); ++cmask) {
                if (__builtin_popcount(static_cast<unsigned>(cmask)) != size) {
                    continue;
                }
                IntMatrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
                std::size_t r = 0;
                for (int i = 0; i < n; ++i) {
                    if (!(mask & (1 << i))) {
                        continue;
                    }
                    std::size_t c = 0;
                    for (int j = 0; j < n; ++j) {
                        if (cmask & (1 << j)) {
                            m(r, c++) = static_cast<long>(twice(i, j));
                        }
                    }
                    ++r;
                }
                if (determinant(m) != 0) {
                    return size;
                }
            }
        }
    }
    return 0;
}

BigInt IndexMatrix::det_twice() const {
    std::vector<int> rows(static_cast<std::size_t>(degree_));
    std::iota(rows.begin(), rows.end(), 0);
    return determinant(twice_matrix(*this, rows));
}

Rational IndexMatrix::det() const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(degree_));
    return Rational(det_twice(), scale);
}

IndexMatrix IndexMatrix::extended() const {
    if (degree_ == kMaxDegree) {
        throw std::invalid_argument("IndexMatrix::extended: degree 3 is the maximum");
    }
    IndexMatrix t = zero(degree_ + 1);
    for (int i = 0; i < degree_; ++i) {
        t.diag_[static_cast<std::size_t>(i)] = diag_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < degree_; ++j) {
            t.off_[off_index(i, j)] = off_[off_index(i, j)];
        }
    }
    return t;
}

bool IndexMatrix::last_row_zero() const {
    if (degree_ == 0) {
        return false;
    }
    const int last = degree_ - 1;
    for (int j = 0; j < degree_; ++j) {
        if (twice(last, j) != 0) {
            return false;
        }
    }
    return true;
}

IndexMatrix IndexMatrix::truncated() const {
    if (degree_ == 0) {
        throw std::invalid_argument("IndexMatrix::truncated: degree 0");
    }
    IndexMatrix t = zero(degree_ - 1);
    for (int i = 0; i < degree_ - 1; ++i) {
        t.diag_[static_cast<std::size_t>(i)] = diag_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < degree_ - 1; ++j) {
            t.off_[off_index(i, j)] = off_[off_index(i, j)];
        }
    }
    return t;
}

IndexMatrix IndexMatrix::permuted(std::span<const int> perm) const {
    IndexMatrix t = zero(degree_);
    for (int i = 0; i < degree_; ++i) {
        t.diag_[static_cast<std::size_t>(i)] = diag_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        for (int j = i + 1; j < degree_; ++j) {
            t.off_[off_index(i, j)] =
                twice(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
    }
    return t;
}

IndexMatrix IndexMatrix::signed_by(std::span<const int> signs) const {
    IndexMatrix t = *this;
    for (int i = 0; i < degree_; ++i) {
        for (int j = i + 1; j < degree_; ++j) {
            t.off_[off_index(i, j)] *= signs[static_cast<std::size_t>(i)] * signs[static_cast<std::size_t>(j)];
        }
    }
    return t;
}

IndexMatrix IndexMatrix::signed_permutation_canonical() const {
    std::vector<int> perm(static_cast<std::size_t>(degree_));
    std::iota(perm.begin(), perm.end(), 0);
    IndexMatrix best = *this;
    do {
        const IndexMatrix p = permuted(perm);
        for (int mask = 0; mask < (1 << degree_); ++mask) {
            std::vector<int> signs(static_cast<std::size_t>(degree_));
            for (int i = 0; i < degree_; ++i) {
                signs[static_cast<std::size_t>(i)] = (mask & (1 << i)) ? -1 : 1;
            }
            const IndexMatrix candidate = p.signed_by(signs);
            if (candidate < best) {
                best = candidate;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

IndexMatrix operator+(const IndexMatrix& a, const IndexMatrix& b) {
    if (a.degree_ != b.degree_) {
        throw std::invalid_argument("IndexMatrix: degree mismatch");
    }
    IndexMatrix t = a;
    for (std::size_t i = 0; i < 3; ++i) {
        t.diag_[i] += b.diag_[i];
        t.off_[i] += b.off_[i];
    }
    return t;
}

IndexMatrix operator-(const IndexMatrix& a, const IndexMatrix& b) {
    if (a.degree_ != b.degree_) {
        throw std::invalid_argument("IndexMatrix: degree mismatch");
    }
    IndexMatrix t = a;
    for (std::size_t i = 0; i < 3; ++i) {
        t.diag_[i] -= b.diag_[i];
        t.off_[i] -= b.off_[i];
    }
    return t;
}

namespace {

// |b_ij| <= 2 sqrt(t_ii t_jj)
std::int64_t off_bound(std::int64_t a, std::int64_t b) {
    const BigInt prod = BigInt(static_cast<long>(4 * a)) * static_cast<long>(b);
    return isqrt(prod).get_si();
}

} // namespace

Box psd_with_diagonal(std::span<const std::int64_t> diagonal) {
    const int n = static_cast<int>(diagonal.size());
    check_degree(n);
    Box out;
    for (const auto d : diagonal) {
        if (d < 0) {
            return out;
        }
    }
    std::vector<std::int64_t> enc(diagonal.begin(), diagonal.end());
    if (n <= 1) {
        out.push_back(IndexMatrix::from_encoding(n, enc));
        return out;
    }
    if (n == 2) {
        const std::int64_t lim = off_bound(enc[0], enc[1]);
        for (std::int64_t b = -lim; b <= lim; ++b) {
            const IndexMatrix t = IndexMatrix::of(enc[0], enc[1], b);
            if (t.is_psd()) {
                out.push_back(t);
            }
        }
        return out;
    }
    const std::int64_t l12 = off_bound(enc[0], enc[1]);
    const std::int64_t l13 = off_bound(enc[0], enc[2]);
    const std::int64_t l23 = off_bound(enc[1], enc[2]);
    for (std::int64_t b12 = -l12; b12 <= l12; ++b12) {
        for (std::int64_t b13 = -l13; b13 <= l13; ++b13) {
            for (std::int64_t b23 = -l23; b23 <= l23; ++b23) {
                const IndexMatrix t = IndexMatrix::of(enc[0], enc[1], enc[2], b12, b13, b23);
                if (t.is_psd()) {
                    out.push_back(t);
                }
            }
        }
    }
    return out;
}

Box diagonal_box(std::span<const std::int64_t> max_diag) {
    const int n = static_cast<int>(max_diag.size());
    check_degree(n);
    Box out;
    std::vector<std::int64_t> diag(static_cast<std::size_t>(n), 0);
    while (true) {
        for (auto& t : psd_with_diagonal(diag)) {
            out.push_back(t);
        }
        int i = 0;
        while (i < n && diag[static_cast<std::size_t>(i)] == max_diag[static_cast<std::size_t>(i)]) {
            diag[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
        ++diag[static_cast<std::size_t>(i)];
    }
    normalize_box(out);
    return out;
}

Box diagonal_box(int degree, std::int64_t max_diag) {
    const std::vector<std::int64_t> bounds(static_cast<std::size_t>(degree), max_diag);
    return diagonal_box(bounds);
}

void normalize_box(Box& box) {
    std::sort(box.begin(), box.end());
    box.erase(std::unique(box.begin(), box.end()), box.end());
}

bool box_contains(const Box& sorted_box, const IndexMatrix& t) {
    return std::binary_search(sorted_box.begin(), sorted_box.end(), t);
}

} // namespace niemeier
