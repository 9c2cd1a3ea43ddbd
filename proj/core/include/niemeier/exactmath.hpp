#pragma once

// Exact integer/rational arithmetic and the scalar number-theoretic functions
// used by the Eisenstein coefficient formulas.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace niemeier {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int value) : value_(value) {}
    Rational(long value) : value_(value) {}
    Rational(long long value) : value_(static_cast<long>(value)) {}
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& value);

    /// Parses "p" or "p/q".
    static Rational parse(const std::string& text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// Numerator; throws std::domain_error unless integral.
    BigInt to_integer() const;
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);

/// Bernoulli number B_n with B_1 = -1/2. Memoized; safe to call concurrently.
Rational bernoulli(unsigned n);

/// Bernoulli polynomial B_n(x).
Rational bernoulli_polynomial(unsigned n, const Rational& x);

/// Kronecker symbol (D/m).
int kronecker_symbol(std::int64_t D, std::int64_t m);

/// True for 1, squarefree D = 1 mod 4, and 4m with m = 2,3 mod 4 squarefree.
bool is_fundamental_discriminant(std::int64_t D);

/// Generalized Bernoulli number B_{n,chi_D} for chi_D the Kronecker character of
/// the fundamental discriminant D. Throws std::invalid_argument otherwise.
Rational generalized_bernoulli(unsigned n, std::int64_t D);

/// Writes a discriminant (nonzero, = 0 or 1 mod 4) as D * f^2 with D fundamental.
std::pair<std::int64_t, std::int64_t> fundamental_decomposition(std::int64_t disc);

/// sigma_k(n) = sum of d^k over positive divisors d of n.
BigInt divisor_sum(std::int64_t n, unsigned k);

std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
int mobius(std::int64_t n);

/// Residue of a p-integral rational modulo m, in [0, m). Throws std::domain_error
/// when the denominator is not invertible modulo m.
std::int64_t residue_mod(const Rational& value, std::int64_t m);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

} // namespace niemeier
