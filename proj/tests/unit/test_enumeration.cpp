#include <random>

#include <gtest/gtest.h>

#include "niemeier/context.hpp"
#include "niemeier/enumeration.hpp"
#include "niemeier/fourier.hpp"
#include "niemeier/lattices.hpp"
#include "oracles.hpp"

using namespace niemeier;

namespace {

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-1, 1);
    for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        if (i == j) {
            u.swap_rows(i, (i + 1) % n);
            continue;
        }
        const int c = coeff(rng);
        for (std::size_t k = 0; k < n; ++k) {
            u(i, k) += c * u(j, k);
        }
    }
    return u;
}

} // namespace

TEST(ShortVectors, SmallFormsAgainstBruteForce) {
    const std::vector<std::vector<std::vector<std::int64_t>>> grams{
        {{2, 1}, {1, 2}},
        {{4, 1}, {1, 6}},
        {{2, 1}, {1, 12}},
        {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
        {{4, 2, 1}, {2, 6, 3}, {1, 3, 8}},
    };
    for (const auto& rows : grams) {
        const GramMatrix g = GramMatrix::from_rows(rows);
        for (std::int64_t t11 = 0; t11 <= 3; ++t11) {
            for (std::int64_t t22 = 0; t22 <= 3; ++t22) {
                for (std::int64_t b = -3; b <= 3; ++b) {
                    const IndexMatrix t = IndexMatrix::of(t11, t22, b);
                    if (!t.is_psd()) {
                        continue;
                    }
                    EXPECT_EQ(count_representations(g, t), oracle::brute_pairs(rows, t11, t22, b, 4))
                        << t.bracket_string();
                }
            }
        }
    }
}

TEST(ShortVectors, ShellTableIsClosedUnderNegation) {
    const ShellTable table = short_vectors(root_gram({'E', 8}), 4);
    EXPECT_EQ(table.size(2), 240u);
    EXPECT_EQ(table.size(4), 2160u);
    const GramMatrix& g = table.gram();
    for (std::size_t i = 0; i < table.size(2); ++i) {
        const auto v = table.vector(2, i);
        EXPECT_EQ(g.inner(v, v), 2);
    }
}

TEST(ShortVectors, BudgetIsEnforced) {
    Budget tiny;
    tiny.max_vectors = 100;
    EXPECT_THROW(short_vectors(root_gram({'E', 8}), 4, tiny), BudgetExceeded);
    Budget few_nodes;
    few_nodes.max_nodes = 10;
    EXPECT_THROW(count_by_norm(root_gram({'E', 8}), 4, few_nodes), BudgetExceeded);
}

namespace {

// a(T) by looping over all triples of stored short vectors
std::uint64_t brute_triples(const ShellTable& table, const IndexMatrix& t) {
    const GramMatrix& g = table.gram();
    std::uint64_t count = 0;
    const auto shell = [&](int i) { return table.size(2 * t.t(i)); };
    for (std::size_t a = 0; a < shell(0); ++a) {
        const auto x = table.vector(2 * t.t(0), a);
        for (std::size_t b = 0; b < shell(1); ++b) {
            const auto y = table.vector(2 * t.t(1), b);
            if (g.inner(x, y) != t.twice(0, 1)) {
                continue;
            }
            for (std::size_t c = 0; c < shell(2); ++c) {
                const auto z = table.vector(2 * t.t(2), c);
                if (g.inner(x, z) == t.twice(0, 2) && g.inner(y, z) == t.twice(1, 2)) {
                    ++count;
                }
            }
        }
    }
    return count;
}

} // namespace

TEST(ThetaCounter, TriplesAgreeWithBruteForceUnderSignedPermutations) {
    const GramMatrix g = root_gram({'D', 5});
    const ShellTable table = short_vectors(g, 2);
    ThetaCounter counter(g);
    std::mt19937_64 rng(7);
    const std::array<std::int64_t, 3> ones{1, 1, 1};
    for (const auto& t : psd_with_diagonal(ones)) {
        std::array<int, 3> perm{0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::array<int, 3> signs{1, -1, 1};
        std::shuffle(signs.begin(), signs.end(), rng);
        const std::uint64_t ref = brute_triples(table, t);
        EXPECT_EQ(counter.count(t), ref) << t.bracket_string();
        EXPECT_EQ(brute_triples(table, t.permuted(perm).signed_by(signs)), ref) << t.bracket_string();
    }
}

TEST(ThetaCounter, RowSumsOverOffDiagonalEntries) {
    // summing a(T) over all T with a fixed diagonal counts tuples by norms only
    const GramMatrix g = root_gram({'A', 4});
    ThetaCounter counter(g);
    const auto counts = count_by_norm(g, 4);
    for (const std::array<std::int64_t, 2> diag : {std::array<std::int64_t, 2>{1, 1}, {1, 2}, {2, 2}}) {
        std::uint64_t total = 0;
        for (const auto& t : psd_with_diagonal(diag)) {
            total += counter.count(t);
        }
        EXPECT_EQ(total, counts[2 * diag[0]] * counts[2 * diag[1]]);
    }
}

TEST(ThetaCounter, TriplesOfOrthogonalRootsInA1To24) {
    ThetaContext ctx;
    EXPECT_EQ(ctx.theta_coefficient("psi", IndexMatrix::bracket(1, 1, 1, 0, 0, 0)), 48u * 46u * 44u);
}

TEST(ThetaCounter, A1To24RootPairsMatchGolayWeightEnumerator) {
    ThetaContext ctx;
    for (std::int64_t m = 1; m <= 2; ++m) {
        const IndexMatrix t = IndexMatrix::of(1, m, 1);
        EXPECT_EQ(BigInt(std::to_string(ctx.theta_coefficient("psi", t))), oracle::a1_24_root_pairs(m))
            << t.bracket_string();
    }
}

// Theta series in degree 1 only depend on the lattice, not on the chosen basis.
TEST(ThetaCounter, UnimodularBasisChangeInvariance) {
    std::mt19937_64 rng(20240615);
    for (const auto& name : niemeier_names()) {
        const GramMatrix g = build_niemeier(name).gram;
        const auto ref = count_by_norm(g, 4);
        for (int trial = 0; trial < 10; ++trial) {
            const GramMatrix h = conjugate(g, random_unimodular(24, rng));
            const auto counts = count_by_norm(h, 4);
            ASSERT_EQ(counts, ref) << name << " trial " << trial;
        }
    }
}

TEST(ThetaExpansion, E8CubedDegreeOneSeries) {
    const GramMatrix e8 = root_gram({'E', 8});
    const auto shells = count_by_norm(e8, 6);
    std::vector<mpz_class> e8_series;
    for (std::size_t n = 0; n <= 3; ++n) {
        e8_series.emplace_back(static_cast<unsigned long>(shells[2 * n]));
    }
    const auto cube = oracle::series_product(oracle::series_product(e8_series, e8_series), e8_series);
    EXPECT_EQ(cube, (std::vector<mpz_class>{1, 720, 179280, 16954560}));
    ThetaContext ctx;
    const FourierExpansion gamma = ctx.theta("gamma", 1, diagonal_box(1, 3));
    for (std::int64_t n = 0; n <= 3; ++n) {
        EXPECT_EQ(gamma.at(IndexMatrix::of(n)), Rational(BigInt(cube[static_cast<std::size_t>(n)])));
    }
}
