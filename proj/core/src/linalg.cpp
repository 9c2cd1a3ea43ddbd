#include "niemeier/linalg.hpp"

#include <algorithm>

namespace niemeier {

BigInt determinant(const IntMatrix& input) {
    const std::size_t n = input.rows();
    if (n != input.cols()) {
        throw std::invalid_argument("determinant: matrix is not square");
    }
    if (n == 0) {
        return 1;
    }
    IntMatrix a = input;
    BigInt previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) {
                ++swap_with;
            }
            if (swap_with == n) {
                return 0;
            }
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = v;
            }
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& input) {
    const std::size_t n = input.rows();
    if (n != input.cols()) {
        throw std::invalid_argument("determinant: matrix is not square");
    }
    RatMatrix a = input;
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != k) {
            a.swap_rows(pivot, k);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) {
                continue;
            }
            const Rational factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
            }
        }
    }
    return det;
}

IntMatrix hermite_normal_form(IntMatrix a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        while (true) {
            std::size_t pivot = m;
            for (std::size_t i = r; i < m; ++i) {
                if (a(i, col) != 0 && (pivot == m || abs(a(i, col)) < abs(a(pivot, col)))) {
                    pivot = i;
                }
            }
            if (pivot == m) {
                break;
            }
            a.swap_rows(r, pivot);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, col) == 0) {
                    continue;
                }
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(r, col).get_mpz_t());
                for (std::size_t j = col; j < n; ++j) {
                    a(i, j) -= q * a(r, j);
                }
                if (a(i, col) != 0) {
                    done = false;
                }
            }
            if (done) {
                break;
            }
        }
        if (r >= m || a(r, col) == 0) {
            continue;
        }
        if (a(r, col) < 0) {
            for (std::size_t j = col; j < n; ++j) {
                a(r, j) = -a(r, j);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(r, col).get_mpz_t());
            if (q == 0) {
                continue;
            }
            for (std::size_t j = col; j < n; ++j) {
                a(i, j) -= q * a(r, j);
            }
        }
        ++r;
    }
    IntMatrix basis(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            basis(i, j) = a(i, j);
        }
    }
    return basis;
}

BigInt round_nearest(const Rational& x) {
    // floor((2p + q) / 2q)
    BigInt numerator = 2 * x.num() + x.den();
    BigInt denominator = 2 * x.den();
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return q;
}

namespace {

class GramLll {
public:
    GramLll(const IntMatrix& gram, const Rational& delta)
        : n_(gram.rows()), g_(gram), h_(IntMatrix::identity(gram.rows())), mu_(n_, n_), b_(n_), delta_(delta) {}

    LllResult run() {
        if (n_ == 0) {
            return {g_, h_};
        }
        b_[0] = Rational(g_(0, 0));
        if (b_[0].sign() <= 0) {
            throw std::invalid_argument("lll_reduce_gram: Gram matrix is not positive definite");
        }
        std::size_t k = 1;
        std::size_t kmax = 0;
        while (k < n_) {
            if (k > kmax) {
                kmax = k;
                for (std::size_t j = 0; j < k; ++j) {
                    Rational acc(g_(k, j));
                    for (std::size_t i = 0; i < j; ++i) {
                        acc -= mu_(j, i) * mu_(k, i) * b_[i];
                    }
                    mu_(k, j) = acc / b_[j];
                }
                Rational bk(g_(k, k));
                for (std::size_t j = 0; j < k; ++j) {
                    bk -= mu_(k, j) * mu_(k, j) * b_[j];
                }
                if (bk.sign() <= 0) {
                    throw std::invalid_argument("lll_reduce_gram: Gram matrix is not positive definite");
                }
                b_[k] = bk;
            }
            reduce(k, k - 1);
            if (b_[k] < (delta_ - mu_(k, k - 1) * mu_(k, k - 1)) * b_[k - 1]) {
                swap(k, kmax);
                k = std::max<std::size_t>(1, k - 1);
            } else {
                for (std::size_t l = k - 1; l-- > 0;) {
                    reduce(k, l);
                }
                ++k;
            }
        }
        return {g_, h_};
    }

private:
    void reduce(std::size_t k, std::size_t l) {
        const Rational& m = mu_(k, l);
        if (Rational(BigInt(2)) * (m.sign() < 0 ? -m : m) <= Rational(1)) {
            return;
        }
        const BigInt q = round_nearest(m);
        for (std::size_t j = 0; j < n_; ++j) {
            h_(k, j) -= q * h_(l, j);
        }
        g_(k, k) = g_(k, k) - 2 * q * g_(k, l) + q * q * g_(l, l);
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == k) {
                continue;
            }
            g_(k, i) -= q * g_(l, i);
            g_(i, k) = g_(k, i);
        }
        mu_(k, l) -= Rational(q);
        for (std::size_t i = 0; i < l; ++i) {
            mu_(k, i) -= Rational(q) * mu_(l, i);
        }
    }

    void swap(std::size_t k, std::size_t kmax) {
        h_.swap_rows(k, k - 1);
        g_.swap_rows(k, k - 1);
        for (std::size_t i = 0; i < n_; ++i) {
            std::swap(g_(i, k), g_(i, k - 1));
        }
        for (std::size_t j = 0; j + 1 < k; ++j) {
            std::swap(mu_(k, j), mu_(k - 1, j));
        }
        const Rational m = mu_(k, k - 1);
        const Rational bn = b_[k] + m * m * b_[k - 1];
        mu_(k, k - 1) = m * b_[k - 1] / bn;
        b_[k] = b_[k - 1] * b_[k] / bn;
        b_[k - 1] = bn;
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            const Rational t = mu_(i, k);
            mu_(i, k) = mu_(i, k - 1) - m * t;
            mu_(i, k - 1) = t + mu_(k, k - 1) * mu_(i, k);
        }
    }

    std::size_t n_;
    IntMatrix g_;
    IntMatrix h_;
    RatMatrix mu_;
    std::vector<Rational> b_;
    Rational delta_;
};

} // namespace

LllResult lll_reduce_gram(const IntMatrix& gram, const Rational& delta) {
    if (gram.rows() != gram.cols()) {
        throw std::invalid_argument("lll_reduce_gram: matrix is not square");
    }
    return GramLll(gram, delta).run();
}

std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw std::invalid_argument("solve_linear: shape mismatch");
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        a.swap_rows(pivot, k);
        std::swap(b[pivot], b[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) {
                continue;
            }
            const Rational factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
            }
            b[i] -= factor * b[k];
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        b[k] /= a(k, k);
    }
    return b;
}

} // namespace niemeier
