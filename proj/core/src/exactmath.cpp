#include "niemeier/exactmath.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace niemeier {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(BigInt(text));
    }
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

BigInt Rational::to_integer() const {
    if (!is_integer()) {
        throw std::domain_error("Rational::to_integer: " + to_string() + " is not an integer");
    }
    return value_.get_num();
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}
Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_memo{Rational(1)};

} // namespace

Rational bernoulli(unsigned n) {
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    while (bernoulli_memo.size() <= n) {
        const unsigned m = static_cast<unsigned>(bernoulli_memo.size());
        Rational acc;
        for (unsigned k = 0; k < m; ++k) {
            acc += Rational(binomial(m + 1, k)) * bernoulli_memo[k];
        }
        bernoulli_memo.push_back(-acc / Rational(BigInt(m + 1)));
    }
    return bernoulli_memo[n];
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
    Rational acc;
    Rational xpow(1);
    // sum_k C(n,k) B_{n-k} x^k
    for (unsigned k = 0; k <= n; ++k) {
        acc += Rational(binomial(n, k)) * bernoulli(n - k) * xpow;
        xpow *= x;
    }
    return acc;
}

int kronecker_symbol(std::int64_t D, std::int64_t m) {
    BigInt a(static_cast<long>(D));
    BigInt b(static_cast<long>(m));
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    n = std::llabs(n);
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n <= 0) {
        throw std::invalid_argument("divisors: n must be positive");
    }
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t count = out.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) {
                out.push_back(out[j] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(std::int64_t n) {
    int result = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) {
            return 0;
        }
        result = -result;
    }
    return result;
}

namespace {

bool squarefree(std::int64_t n) {
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) {
            return false;
        }
    }
    return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 1) {
        return true;
    }
    if (D == 0) {
        return false;
    }
    if (mod(D, 4) == 1) {
        return squarefree(D);
    }
    if (mod(D, 4) == 0) {
        const std::int64_t m = D / 4;
        const std::int64_t r = mod(m, 4);
        return (r == 2 || r == 3) && squarefree(m);
    }
    return false;
}

std::pair<std::int64_t, std::int64_t> fundamental_decomposition(std::int64_t disc) {
    if (disc == 0 || (mod(disc, 4) != 0 && mod(disc, 4) != 1)) {
        throw std::invalid_argument("fundamental_decomposition: not a discriminant: " + std::to_string(disc));
    }
    std::int64_t core = 1;
    std::int64_t f = 1;
    for (const auto& [p, e] : factorize(disc)) {
        for (int i = 0; i < e / 2; ++i) {
            f *= p;
        }
        if (e % 2 == 1) {
            core *= p;
        }
    }
    std::int64_t D = disc < 0 ? -core : core;
    if (mod(D, 4) != 1) {
        D *= 4;
        f /= 2;
    }
    return {D, f};
}

Rational generalized_bernoulli(unsigned n, std::int64_t D) {
    if (!is_fundamental_discriminant(D)) {
        throw std::invalid_argument("generalized_bernoulli: " + std::to_string(D) +
                                    " is not a fundamental discriminant");
    }
    if (D == 1) {
        return bernoulli(n);
    }
    const std::int64_t f = std::llabs(D);
    Rational acc;
    for (std::int64_t a = 1; a <= f; ++a) {
        const int chi = kronecker_symbol(D, a);
        if (chi == 0) {
            continue;
        }
        const Rational term = bernoulli_polynomial(n, Rational(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(f))));
        acc += chi > 0 ? term : -term;
    }
    return acc * pow(Rational(static_cast<long>(f)), n - 1);
}

BigInt divisor_sum(std::int64_t n, unsigned k) {
    BigInt total = 0;
    for (const std::int64_t d : divisors(n)) {
        BigInt dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        total += dk;
    }
    return total;
}

std::int64_t residue_mod(const Rational& value, std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("residue_mod: modulus must be positive");
    }
    if (m == 1) {
        return 0;
    }
    const BigInt modulus(static_cast<long>(m));
    BigInt inverse;
    if (mpz_invert(inverse.get_mpz_t(), value.den().get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw std::domain_error("residue_mod: " + value.to_string() + " is not integral at " + std::to_string(m));
    }
    BigInt r = value.num() * inverse;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r.get_si();
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) {
        throw std::domain_error("isqrt of a negative number");
    }
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace niemeier
