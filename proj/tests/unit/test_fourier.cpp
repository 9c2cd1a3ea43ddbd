#include <gtest/gtest.h>

#include "niemeier/context.hpp"
#include "niemeier/enumeration.hpp"
#include "niemeier/fourier.hpp"
#include "niemeier/lattices.hpp"

using namespace niemeier;

TEST(IndexMatrix, EncodingAndBracketNotation) {
    const IndexMatrix t = IndexMatrix::bracket(1, 1, 1, 0, 0, 1);
    EXPECT_EQ(t.bracket_string(), "[1,1,1;0,0,1]");
    EXPECT_EQ(t.twice(0, 1), 1);
    EXPECT_EQ(t.twice(1, 2), 0);
    EXPECT_EQ(IndexMatrix::parse("[1,1,1;0,0,1]"), t);
    EXPECT_EQ(IndexMatrix::from_encoding(3, t.encoding()), t);
    EXPECT_EQ(IndexMatrix::bracket(2, 1, 3).det_twice(), 23);
    EXPECT_EQ(IndexMatrix::bracket(1, 1, 6).det_twice(), 23);
    EXPECT_EQ(IndexMatrix::bracket(1, 1, 1, 1, 1, 1).det(), Rational(BigInt(1), BigInt(2)));
    EXPECT_EQ(IndexMatrix::bracket(1, 1, 1, 0, 0, 0).rank(), 3);
    EXPECT_EQ(IndexMatrix::bracket(1, 2, 1).rank(), 1);
    EXPECT_FALSE(IndexMatrix::bracket(1, 3, 1).is_psd());
}

TEST(IndexMatrix, SignedPermutationCanonicalFormIsAClassInvariant) {
    for (const auto& t : diagonal_box(3, 1)) {
        const IndexMatrix c = t.signed_permutation_canonical();
        const std::array<int, 3> perm{2, 0, 1};
        const std::array<int, 3> signs{-1, 1, -1};
        EXPECT_EQ(t.permuted(perm).signed_permutation_canonical(), c);
        EXPECT_EQ(t.signed_by(signs).signed_permutation_canonical(), c);
    }
}

TEST(Sturm, BoundsForWeightTwelve) {
    EXPECT_EQ(sturm_bound(1, 12), 1);
    EXPECT_EQ(sturm_bound(2, 12), 1);
    EXPECT_EQ(sturm_bound(3, 12), 1);
    EXPECT_EQ(sturm_bound(3, 24), 3);
    // every index has t_ii <= 1 and is positive semidefinite
    const Box box = sturm_box(3, 12);
    for (const auto& t : box) {
        EXPECT_TRUE(t.is_psd());
        for (int i = 0; i < 3; ++i) {
            EXPECT_LE(t.t(i), 1);
        }
    }
    EXPECT_EQ(box.size(), diagonal_box(3, 1).size());
    EXPECT_EQ(sturm_box(2, 12).size(), 1u + 2u + 5u);
}

TEST(Fourier, SetRejectsIndefiniteIndices) {
    FourierExpansion f(2, Rational(12));
    EXPECT_THROW(f.set(IndexMatrix::bracket(1, 3, 1), Rational(1)), std::invalid_argument);
    EXPECT_THROW(static_cast<void>(f.at(IndexMatrix::bracket(1, 0, 1))), CoverageError);
}

TEST(Fourier, JsonRoundTrip) {
    ThetaContext ctx;
    const FourierExpansion f = ctx.theta("psi", 2, diagonal_box(2, 1));
    EXPECT_EQ(expansion_from_json(to_json(f)), f);
    FourierExpansion big(1, Rational(12));
    big.set(IndexMatrix::of(1), Rational(BigInt("123456789012345678901234567890"), BigInt(7)));
    EXPECT_EQ(expansion_from_json(to_json(big)), big);
}

TEST(Fourier, MultiplicationIsOrthogonalSum) {
    const GramMatrix e8 = root_gram({'E', 8});
    const std::array<std::int64_t, 2> bounds{1, 2};
    const Box box = diagonal_box(bounds);
    const FourierExpansion t8 = theta_expansion(e8, 2, box);
    const FourierExpansion t16 = theta_expansion(direct_sum(e8, e8), 2, box);
    const FourierExpansion square = multiply(t8, t8, box);
    EXPECT_EQ(square, t16);
    EXPECT_EQ(square.weight(), Rational(8));
}

TEST(Fourier, E8CubedIsGammaInDegreesTwoAndThree) {
    ThetaContext ctx;
    const GramMatrix e8 = root_gram({'E', 8});
    for (int degree = 2; degree <= 3; ++degree) {
        const Box box = diagonal_box(degree, 1);
        const FourierExpansion t8 = theta_expansion(e8, degree, box);
        const FourierExpansion cube = multiply(multiply(t8, t8, box), t8, box);
        EXPECT_EQ(cube, ctx.theta("gamma", degree, box)) << "degree " << degree;
    }
}

TEST(Fourier, MultiplicationCommutes) {
    const Box box = diagonal_box(2, 2);
    const FourierExpansion a = theta_expansion(root_gram({'D', 4}), 2, box);
    const FourierExpansion b = theta_expansion(root_gram({'A', 2}), 2, box);
    EXPECT_EQ(multiply(a, b, box), multiply(b, a, box));
    EXPECT_THROW(multiply(a, b, diagonal_box(2, 3)), CoverageError);
}

TEST(Fourier, SiegelOperatorChainForEveryLattice) {
    ThetaContext ctx;
    for (const auto& name : niemeier_names()) {
        const FourierExpansion f3 = ctx.theta(name, 3, diagonal_box(3, 1));
        const FourierExpansion f2 = ctx.theta(name, 2, diagonal_box(2, 1));
        const FourierExpansion f1 = ctx.theta(name, 1, diagonal_box(1, 1));
        EXPECT_EQ(siegel_operator(f3), f2) << name;
        EXPECT_EQ(siegel_operator(f2), f1) << name;
    }
}

TEST(Fourier, ThetaOperatorAndRestriction) {
    ThetaContext ctx;
    const FourierExpansion f = ctx.theta("alpha", 2, diagonal_box(2, 1));
    const FourierExpansion g = theta_operator(f);
    for (const auto& [t, v] : g.coefficients()) {
        EXPECT_EQ(v, t.det() * f.at(t));
    }
    const std::array<std::int64_t, 2> diag{1, 1};
    // all pairs of roots: 1104^2
    EXPECT_EQ(diagonal_restriction_coeff(f, diag), Rational(1104 * 1104));
    const Box small = diagonal_box(2, 0);
    EXPECT_EQ(f.restricted(small).size(), 1u);
    EXPECT_EQ(down_closure({IndexMatrix::bracket(1, 1, 1)}), diagonal_box(2, 1));
}

TEST(Fourier, CongruenceResidues) {
    FourierExpansion a(1, Rational(12));
    FourierExpansion b(1, Rational(12));
    a.set(IndexMatrix::of(0), Rational(1));
    b.set(IndexMatrix::of(0), Rational(24));
    a.set(IndexMatrix::of(1), Rational(BigInt(1), BigInt(2)));
    b.set(IndexMatrix::of(1), Rational(12));
    EXPECT_TRUE(congruent_mod(a, b, 23, a.box()).empty());
    const auto bad = congruent_mod(a, b, 5, a.box());
    ASSERT_EQ(bad.size(), 2u);
    EXPECT_EQ(bad[0].lhs, 1);
    EXPECT_EQ(bad[0].rhs, 4);
}
