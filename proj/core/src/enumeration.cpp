#include "niemeier/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "niemeier/fourier.hpp"
#include "niemeier/linalg.hpp"

namespace niemeier {

namespace {

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("enumeration: 128-bit overflow");
    }
    return r;
}

i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("enumeration: 128-bit overflow");
    }
    return r;
}

i128 isqrt128(i128 n) {
    if (n <= 0) {
        return 0;
    }
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

std::int64_t to_i64(const BigInt& v) {
    if (!v.fits_slong_p()) {
        throw std::overflow_error("enumeration: Bareiss entry exceeds 64 bits");
    }
    return v.get_si();
}

// Depth-first enumeration of {y : y^T G y <= bound} for an LLL-reduced G.
// With d_k the leading minors and a^(k) the Bareiss matrices, the integer
// W_k = d_k * (partial norm from coordinate k upward) satisfies
// W_k d_{k+1} = d_k W_{k+1} + (d_{k+1} y_k + u_k)^2, u_k = sum_{j>k} a^(k)_kj y_j.
class Enumerator {
public:
    Enumerator(const GramMatrix& reduced, std::int64_t bound, const Budget& budget)
        : n_(static_cast<int>(reduced.dim())), bound_(bound), budget_(budget), d_(reduced.dim() + 1),
          row_(reduced.dim(), std::vector<std::int64_t>(reduced.dim(), 0)), y_(reduced.dim(), 0) {
        IntMatrix m = reduced.to_int_matrix();
        const std::size_t n = reduced.dim();
        BigInt prev = 1;
        d_[0] = 1;
        for (std::size_t k = 0; k < n; ++k) {
            d_[k + 1] = to_i64(m(k, k));
            for (std::size_t j = k + 1; j < n; ++j) {
                row_[k][j] = to_i64(m(k, j));
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
                }
            }
            prev = m(k, k);
        }
    }

    template <typename Visit>
    void run(Visit&& visit) {
        if (n_ == 0) {
            visit(std::int64_t{0}, std::span<const std::int32_t>(y_));
            return;
        }
        search(n_ - 1, 0, visit);
    }

private:
    template <typename Visit>
    void search(int k, i128 w_next, Visit& visit) {
        const auto ku = static_cast<std::size_t>(k);
        const i128 dk = d_[ku];
        const i128 dk1 = d_[ku + 1];
        i128 u = 0;
        for (int j = k + 1; j < n_; ++j) {
            u = checked_add(u, checked_mul(row_[ku][static_cast<std::size_t>(j)], y_[static_cast<std::size_t>(j)]));
        }
        const i128 r = checked_mul(dk, checked_mul(dk1, bound_) - w_next);
        const i128 s = isqrt128(r);
        const i128 lo = ceil_div(-s - u, dk1);
        const i128 hi = floor_div(s - u, dk1);
        for (i128 x = lo; x <= hi; ++x) {
            if (++nodes_ > budget_.max_nodes) {
                throw BudgetExceeded("enumeration node budget of " + std::to_string(budget_.max_nodes) + " exceeded");
            }
            const i128 t = dk1 * x + u;
            const i128 w = (checked_add(checked_mul(dk, w_next), checked_mul(t, t))) / dk1;
            y_[ku] = static_cast<std::int32_t>(x);
            if (k == 0) {
                visit(static_cast<std::int64_t>(w), std::span<const std::int32_t>(y_));
            } else {
                search(k - 1, w, visit);
            }
        }
        y_[ku] = 0;
    }

    int n_;
    i128 bound_;
    Budget budget_;
    std::vector<std::int64_t> d_;
    std::vector<std::vector<std::int64_t>> row_;
    std::vector<std::int32_t> y_;
    std::uint64_t nodes_ = 0;
};

struct Reduction {
    GramMatrix reduced;
    std::vector<std::int64_t> transform;  // row-major, rows are reduced basis vectors in old coordinates
};

Reduction reduce(const GramMatrix& gram) {
    const LllResult lll = lll_reduce_gram(gram.to_int_matrix());
    Reduction r{GramMatrix::from_int_matrix(lll.gram), {}};
    const std::size_t n = gram.dim();
    r.transform.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r.transform[i * n + j] = to_i64(lll.transform(i, j));
        }
    }
    return r;
}

void check_bound(const GramMatrix& gram, std::int64_t max_norm) {
    if (max_norm < 0) {
        throw std::invalid_argument("short_vectors: max_norm must be non-negative");
    }
    if (!gram.is_positive_definite()) {
        throw std::invalid_argument("short_vectors: Gram matrix is not positive definite");
    }
}

} // namespace

ShellTable::ShellTable(GramMatrix gram, std::int64_t max_norm, std::map<std::int64_t, std::vector<std::int32_t>> shells)
    : gram_(std::move(gram)), max_norm_(max_norm), shells_(std::move(shells)) {}

std::size_t ShellTable::size(std::int64_t norm) const {
    const auto it = shells_.find(norm);
    return it == shells_.end() ? 0 : it->second.size() / dim();
}

std::span<const std::int32_t> ShellTable::shell(std::int64_t norm) const {
    if (norm > max_norm_) {
        throw std::out_of_range("ShellTable: norm " + std::to_string(norm) + " beyond enumerated bound " +
                                std::to_string(max_norm_));
    }
    const auto it = shells_.find(norm);
    if (it == shells_.end()) {
        return {};
    }
    return it->second;
}

std::span<const std::int32_t> ShellTable::vector(std::int64_t norm, std::size_t index) const {
    return shell(norm).subspan(index * dim(), dim());
}

std::vector<std::int64_t> ShellTable::norms() const {
    std::vector<std::int64_t> out;
    for (const auto& [m, v] : shells_) {
        out.push_back(m);
    }
    return out;
}

ShellTable short_vectors(const GramMatrix& gram, std::int64_t max_norm, const Budget& budget) {
    check_bound(gram, max_norm);
    const Reduction red = reduce(gram);
    const std::size_t n = gram.dim();
    std::map<std::int64_t, std::vector<std::int32_t>> shells;
    std::uint64_t stored = 0;
    std::vector<std::int64_t> x(n);
    Enumerator(red.reduced, max_norm, budget).run([&](std::int64_t norm, std::span<const std::int32_t> y) {
        if (++stored > budget.max_vectors) {
            throw BudgetExceeded("short_vectors: more than " + std::to_string(budget.max_vectors) +
                                 " vectors of norm <= " + std::to_string(max_norm));
        }
        std::fill(x.begin(), x.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                x[j] += static_cast<std::int64_t>(y[i]) * red.transform[i * n + j];
            }
        }
        auto& shell = shells[norm];
        for (const auto v : x) {
            if (v < INT32_MIN || v > INT32_MAX) {
                throw std::overflow_error("short_vectors: coordinate exceeds 32 bits");
            }
            shell.push_back(static_cast<std::int32_t>(v));
        }
    });
    shells.try_emplace(0);
    return ShellTable(gram, max_norm, std::move(shells));
}

std::vector<std::uint64_t> count_by_norm(const GramMatrix& gram, std::int64_t max_norm, const Budget& budget) {
    check_bound(gram, max_norm);
    const Reduction red = reduce(gram);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_norm) + 1, 0);
    Enumerator(red.reduced, max_norm, budget).run([&](std::int64_t norm, std::span<const std::int32_t>) {
        ++counts[static_cast<std::size_t>(norm)];
    });
    return counts;
}

ThetaCounter::ThetaCounter(GramMatrix gram, Budget budget) : gram_(std::move(gram)), budget_(budget) {}

void ThetaCounter::ensure_shells(std::int64_t max_norm) {
    if (!shells_.gram().dim() || shells_.max_norm() < max_norm) {
        shells_ = short_vectors(gram_, max_norm, budget_);
        dual_.clear();
    }
}

const std::vector<std::int64_t>& ThetaCounter::dual_shell(std::int64_t norm) {
    auto it = dual_.find(norm);
    if (it != dual_.end()) {
        return it->second;
    }
    const std::size_t n = gram_.dim();
    const auto shell = shells_.shell(norm);
    std::vector<std::int64_t> out(shell.size(), 0);
    for (std::size_t v = 0; v < shell.size() / n; ++v) {
        const auto x = shell.subspan(v * n, n);
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t acc = 0;
            const auto row = gram_.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                acc += row[j] * x[j];
            }
            out[v * n + i] = acc;
        }
    }
    return dual_.emplace(norm, std::move(out)).first->second;
}

std::uint64_t ThetaCounter::count(const IndexMatrix& t) {
    std::lock_guard lock(mutex_);
    const IndexMatrix key = t.signed_permutation_canonical();
    const auto it = memo_.find(key);
    if (it != memo_.end()) {
        return it->second;
    }
    const std::uint64_t value = count_uncached(key);
    memo_.emplace(key, value);
    return value;
}

namespace {

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int32_t> b) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

std::uint64_t add_count(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("representation count exceeds 64 bits");
    }
    return r;
}

constexpr std::uint64_t kMaxBitsetBits = 1ULL << 32;

} // namespace

std::uint64_t ThetaCounter::count_uncached(const IndexMatrix& t) {
    if (!t.is_psd()) {
        return 0;
    }
    std::vector<int> cols;
    for (int i = 0; i < t.degree(); ++i) {
        if (t.t(i) > 0) {
            cols.push_back(i);
        }
    }
    if (cols.empty()) {
        return 1;
    }
    std::int64_t max_norm = 0;
    for (const int c : cols) {
        max_norm = std::max(max_norm, 2 * t.t(c));
    }
    ensure_shells(max_norm);
    std::stable_sort(cols.begin(), cols.end(),
                     [&](int a, int b) { return shells_.size(2 * t.t(a)) < shells_.size(2 * t.t(b)); });

    const std::size_t n = gram_.dim();
    const std::int64_t m1 = 2 * t.t(cols[0]);
    const std::size_t s1 = shells_.size(m1);
    if (cols.size() == 1) {
        return s1;
    }
    const std::int64_t m2 = 2 * t.t(cols[1]);
    const std::size_t s2 = shells_.size(m2);
    const std::int64_t b12 = t.twice(cols[0], cols[1]);
    const auto& g1 = dual_shell(m1);
    const auto shell2 = shells_.shell(m2);
    std::uint64_t total = 0;
    if (cols.size() == 2) {
        auto [it, fresh] = pair_hist_.try_emplace({m1, m2});
        if (fresh) {
            for (std::size_t a = 0; a < s1; ++a) {
                const std::span<const std::int64_t> gx(g1.data() + a * n, n);
                for (std::size_t b = 0; b < s2; ++b) {
                    ++it->second[dot(gx, shell2.subspan(b * n, n))];
                }
            }
        }
        const auto hit = it->second.find(b12);
        return hit == it->second.end() ? 0 : hit->second;
    }

    const std::int64_t m3 = 2 * t.t(cols[2]);
    const std::size_t s3 = shells_.size(m3);
    const std::int64_t b13 = t.twice(cols[0], cols[2]);
    const std::int64_t b23 = t.twice(cols[1], cols[2]);
    const auto& g2 = dual_shell(m2);
    const auto shell3 = shells_.shell(m3);
    const std::size_t words = (s3 + 63) / 64;

    if (static_cast<std::uint64_t>(s2) * s3 <= kMaxBitsetBits) {
        // ybits[y] = {z : y.z = b23}
        std::vector<std::uint64_t> ybits(s2 * words, 0);
        for (std::size_t b = 0; b < s2; ++b) {
            const std::span<const std::int64_t> gy(g2.data() + b * n, n);
            for (std::size_t c = 0; c < s3; ++c) {
                if (dot(gy, shell3.subspan(c * n, n)) == b23) {
                    ybits[b * words + c / 64] |= 1ULL << (c % 64);
                }
            }
        }
        std::vector<std::uint64_t> zbits(words);
        for (std::size_t a = 0; a < s1; ++a) {
            const std::span<const std::int64_t> gx(g1.data() + a * n, n);
            std::fill(zbits.begin(), zbits.end(), 0);
            for (std::size_t c = 0; c < s3; ++c) {
                if (dot(gx, shell3.subspan(c * n, n)) == b13) {
                    zbits[c / 64] |= 1ULL << (c % 64);
                }
            }
            std::uint64_t acc = 0;
            for (std::size_t b = 0; b < s2; ++b) {
                if (dot(gx, shell2.subspan(b * n, n)) != b12) {
                    continue;
                }
                const std::uint64_t* yb = ybits.data() + b * words;
                for (std::size_t w = 0; w < words; ++w) {
                    acc += static_cast<std::uint64_t>(std::popcount(yb[w] & zbits[w]));
                }
            }
            total = add_count(total, acc);
        }
        return total;
    }

    std::vector<std::size_t> ylist;
    std::vector<std::size_t> zlist;
    for (std::size_t a = 0; a < s1; ++a) {
        const std::span<const std::int64_t> gx(g1.data() + a * n, n);
        ylist.clear();
        zlist.clear();
        for (std::size_t b = 0; b < s2; ++b) {
            if (dot(gx, shell2.subspan(b * n, n)) == b12) {
                ylist.push_back(b);
            }
        }
        for (std::size_t c = 0; c < s3; ++c) {
            if (dot(gx, shell3.subspan(c * n, n)) == b13) {
                zlist.push_back(c);
            }
        }
        std::uint64_t acc = 0;
        for (const std::size_t b : ylist) {
            const std::span<const std::int64_t> gy(g2.data() + b * n, n);
            for (const std::size_t c : zlist) {
                acc += dot(gy, shell3.subspan(c * n, n)) == b23 ? 1 : 0;
            }
        }
        total = add_count(total, acc);
    }
    return total;
}

std::uint64_t count_representations(const GramMatrix& gram, const IndexMatrix& t, const Budget& budget) {
    ThetaCounter counter(gram, budget);
    return counter.count(t);
}

FourierExpansion theta_expansion(ThetaCounter& counter, int degree, const Box& box) {
    FourierExpansion f(degree, Rational(BigInt(static_cast<long>(counter.gram().dim())), BigInt(2)));
    for (const auto& t : box) {
        if (t.degree() != degree) {
            throw std::invalid_argument("theta_expansion: index degree mismatch");
        }
        f.set(t, Rational(BigInt(static_cast<unsigned long>(counter.count(t)))));
    }
    return f;
}

FourierExpansion theta_expansion(const GramMatrix& gram, int degree, const Box& box, const Budget& budget) {
    ThetaCounter counter(gram, budget);
    return theta_expansion(counter, degree, box);
}

} // namespace niemeier
