#include "niemeier/eisenstein.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "niemeier/enumeration.hpp"
#include "niemeier/lattices.hpp"
#include "niemeier/linalg.hpp"

namespace niemeier {

namespace {

std::mutex cohen_mutex;
std::map<std::pair<int, std::int64_t>, Rational> cohen_memo;

Rational cohen_H_uncached(int r, std::int64_t N) {
    const auto ur = static_cast<unsigned>(r);
    if (N == 0) {
        return -bernoulli(2 * ur) / Rational(2 * r);
    }
    const std::int64_t disc = (r % 2 == 0) ? N : -N;
    const std::int64_t m4 = ((disc % 4) + 4) % 4;
    if (m4 != 0 && m4 != 1) {
        return Rational(0);
    }
    const auto [D, f] = fundamental_decomposition(disc);
    const Rational l_value = -generalized_bernoulli(ur, D) / Rational(r);
    Rational sum;
    for (const std::int64_t d : divisors(f)) {
        const int mu = mobius(d);
        const int chi = kronecker_symbol(D, d);
        if (mu == 0 || chi == 0) {
            continue;
        }
        BigInt dpow;
        mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d), ur - 1);
        sum += Rational(mu * chi) * Rational(dpow) * Rational(divisor_sum(f / d, 2 * ur - 1));
    }
    return l_value * sum;
}

Rational deg1_factor(int k) { return Rational(-2 * k) / bernoulli(static_cast<unsigned>(k)); }

std::int64_t content(const IndexMatrix& t) {
    std::int64_t g = 0;
    for (int i = 0; i < t.degree(); ++i) {
        g = std::gcd(g, t.t(i));
        for (int j = i + 1; j < t.degree(); ++j) {
            g = std::gcd(g, t.twice(i, j));
        }
    }
    return g;
}

void require_integral(const FourierExpansion& f, const char* what) {
    for (const auto& [t, v] : f.coefficients()) {
        if (!v.is_integer()) {
            throw std::runtime_error(std::string(what) + ": non-integral coefficient " + v.to_string() + " at " +
                                     t.bracket_string());
        }
    }
}

Box unit_box_deg1(std::int64_t max_n) {
    Box box;
    for (std::int64_t n = 0; n <= max_n; ++n) {
        box.push_back(IndexMatrix::of(n));
    }
    return box;
}

FourierExpansion cube(const FourierExpansion& f, const Box& box) {
    return multiply(multiply(f, f, f.box()), f, box);
}

} // namespace

Rational cohen_H(int r, std::int64_t N) {
    if (r < 1 || N < 0) {
        throw std::invalid_argument("cohen_H: need r >= 1 and N >= 0");
    }
    {
        std::lock_guard lock(cohen_mutex);
        const auto it = cohen_memo.find({r, N});
        if (it != cohen_memo.end()) {
            return it->second;
        }
    }
    Rational value = cohen_H_uncached(r, N);
    std::lock_guard lock(cohen_mutex);
    cohen_memo.emplace(std::make_pair(r, N), value);
    return value;
}

FourierExpansion eisenstein_deg1(int k, std::int64_t max_n) {
    if (k < 4 || k % 2 != 0) {
        throw std::invalid_argument("eisenstein_deg1: weight must be even and at least 4");
    }
    FourierExpansion f(1, Rational(k));
    const Rational factor = deg1_factor(k);
    f.set(IndexMatrix::of(0), Rational(1));
    for (std::int64_t n = 1; n <= max_n; ++n) {
        f.set(IndexMatrix::of(n), factor * Rational(divisor_sum(n, static_cast<unsigned>(k - 1))));
    }
    return f;
}

FourierExpansion delta_deg1(std::int64_t max_n) {
    const Box box = unit_box_deg1(max_n);
    const FourierExpansion e4 = eisenstein_deg1(4, max_n);
    const FourierExpansion e6 = eisenstein_deg1(6, max_n);
    FourierExpansion delta = Rational(BigInt(1), BigInt(1728)) * (cube(e4, box) - multiply(e6, e6, box));
    require_integral(delta, "delta_deg1");
    return delta;
}

Rational deg2_normalization_closed_form(int k) {
    const auto uk = static_cast<unsigned>(k);
    const Rational zeta_a = -bernoulli(uk) / Rational(k);                // zeta(1-k)
    const Rational zeta_b = -bernoulli(2 * uk - 2) / Rational(2 * k - 2);  // zeta(3-2k)
    return Rational(2) / (zeta_a * zeta_b);
}

Rational eisenstein_deg2_coefficient(int k, const Rational& ck, const IndexMatrix& t) {
    if (t.degree() != 2) {
        throw std::invalid_argument("eisenstein_deg2_coefficient: degree-2 index expected");
    }
    const int rank = t.rank();
    if (rank == 0) {
        return Rational(1);
    }
    const std::int64_t m = content(t);
    if (rank == 1) {
        return deg1_factor(k) * Rational(divisor_sum(m, static_cast<unsigned>(k - 1)));
    }
    const std::int64_t disc = t.det_twice().get_si();  // 4ac - b^2
    Rational sum;
    for (const std::int64_t d : divisors(m)) {
        BigInt dpow;
        mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
        sum += Rational(dpow) * cohen_H(k - 1, disc / (d * d));
    }
    return ck * sum;
}

FourierExpansion eisenstein_deg2(int k, const Box& box, const Rational& ck) {
    FourierExpansion f(2, Rational(k));
    for (const auto& t : box) {
        f.set(t, eisenstein_deg2_coefficient(k, ck, t));
    }
    return f;
}

const Rational& Deg2Normalization::for_weight(int k) const {
    switch (k) {
    case 4:
        return c4;
    case 6:
        return c6;
    case 12:
        return c12;
    default:
        throw std::invalid_argument("deg2 normalization available for k = 4, 6, 12 only");
    }
}

const IgusaConstants& igusa_constants() {
    static const IgusaConstants c = [] {
        auto q = [](long num, long den) { return Rational(BigInt(num), BigInt(den)); };
        const long p2_11 = 2048, p2_10 = 1024, p2_7 = 128, p2_2 = 4;
        const long p3_4 = 81, p3_6 = 729, p3_3 = 27;
        const long p5_3 = 125, p7_2 = 49;
        IgusaConstants k;
        k.a1 = q(131L * 593, p2_11 * p3_4 * p5_3 * 337);
        k.a2 = q(131L * 593, p2_10 * p3_6 * p7_2 * 337);
        k.a3 = q(-131L * 593 * 691, p2_11 * p3_6 * p5_3 * p7_2 * 337);
        k.b1 = q(41L * 71 * 109, p2_7 * p3_3 * p5_3 * 337);
        k.b2 = q(1759, p2_2 * p3_4 * p7_2 * 337);
        k.b3 = q(-131L * 593 * 691, p2_7 * p3_4 * p5_3 * p7_2 * 337);
        return k;
    }();
    return c;
}

namespace {

Deg2Normalization calibrate() {
    Deg2Normalization n;
    const IndexMatrix anchor = IndexMatrix::bracket(1, 1, 1);
    n.e8_anchor = count_representations(root_gram(RootComponent{'E', 8}), anchor);
    const Rational h_sum = eisenstein_deg2_coefficient(4, Rational(1), anchor);
    n.c4 = Rational(BigInt(static_cast<unsigned long>(n.e8_anchor))) / h_sum;

    // Y12 = b1 E4^3 + b2 E6^2 + b3 E12; at [1,1,1] and [1,0,1] the E6^2 term is
    // affine in c6 and the E12 term is linear in c12.
    const IgusaConstants& ic = igusa_constants();
    const std::array<IndexMatrix, 2> anchors{IndexMatrix::bracket(1, 1, 1), IndexMatrix::bracket(1, 0, 1)};
    const std::array<Rational, 2> targets{Rational(116), Rational(1206)};
    const Box box = diagonal_box(2, 1);
    const FourierExpansion e4 = eisenstein_deg2(4, box, n.c4);
    const FourierExpansion e4c = cube(e4, box);
    auto e6sq = [&](const Rational& c6) {
        const FourierExpansion e6 = eisenstein_deg2(6, box, c6);
        return multiply(e6, e6, box);
    };
    const FourierExpansion s0 = e6sq(Rational(0));
    const FourierExpansion s1 = e6sq(Rational(1));
    const FourierExpansion s2 = e6sq(Rational(2));
    RatMatrix a(2, 2);
    std::vector<Rational> rhs(2);
    for (std::size_t i = 0; i < 2; ++i) {
        const IndexMatrix& t = anchors[i];
        if (s2.at(t) - Rational(2) * s1.at(t) + s0.at(t) != Rational(0)) {
            throw std::logic_error("E6^2 is not affine in c6 at " + t.bracket_string());
        }
        a(i, 0) = ic.b2 * (s1.at(t) - s0.at(t));
        a(i, 1) = ic.b3 * eisenstein_deg2_coefficient(12, Rational(1), t);
        rhs[i] = targets[i] - ic.b1 * e4c.at(t) - ic.b2 * s0.at(t);
    }
    const auto solution = solve_linear(std::move(a), std::move(rhs));
    if (!solution) {
        throw std::runtime_error("Y12 anchors do not determine c6 and c12");
    }
    n.c6 = (*solution)[0];
    n.c12 = (*solution)[1];
    return n;
}

Box degree2_support(const Box& box) {
    for (const auto& t : box) {
        if (t.degree() != 2) {
            throw std::invalid_argument("degree-2 index expected");
        }
    }
    return down_closure(box);
}

FourierExpansion igusa_combination(const Box& box, const Rational& c1, const Rational& c2, const Rational& c3,
                                   const char* what) {
    const Box support = degree2_support(box);
    const Deg2Normalization& n = deg2_normalization();
    const FourierExpansion e4 = eisenstein_deg2(4, support, n.c4);
    const FourierExpansion e6 = eisenstein_deg2(6, support, n.c6);
    const FourierExpansion e12 = eisenstein_deg2(12, box, n.c12);
    const FourierExpansion e4c = cube(e4, box);
    const FourierExpansion e6s = multiply(e6, e6, box);
    FourierExpansion out = c1 * e4c + c2 * e6s + c3 * e12;
    require_integral(out, what);
    return out;
}

} // namespace

const Deg2Normalization& deg2_normalization() {
    static const Deg2Normalization n = calibrate();
    return n;
}

FourierExpansion eisenstein_deg2(int k, const Box& box) {
    return eisenstein_deg2(k, box, deg2_normalization().for_weight(k));
}

FourierExpansion e4_cubed(const Box& box) {
    if (box.empty()) {
        throw std::invalid_argument("e4_cubed: empty box");
    }
    const int degree = box.front().degree();
    if (degree == 1) {
        std::int64_t max_n = 0;
        for (const auto& t : box) {
            max_n = std::max(max_n, t.t(0));
        }
        return cube(eisenstein_deg1(4, max_n), box);
    }
    if (degree == 2) {
        return cube(eisenstein_deg2(4, degree2_support(box)), box);
    }
    throw std::invalid_argument("e4_cubed: degree 1 or 2 only");
}

FourierExpansion igusa_X12_deg2(const Box& box) {
    const IgusaConstants& c = igusa_constants();
    return igusa_combination(box, c.a1, c.a2, c.a3, "X12");
}

FourierExpansion igusa_Y12_deg2(const Box& box) {
    const IgusaConstants& c = igusa_constants();
    return igusa_combination(box, c.b1, c.b2, c.b3, "Y12");
}

} // namespace niemeier
