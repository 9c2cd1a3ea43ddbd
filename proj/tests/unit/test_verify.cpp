#include <gtest/gtest.h>

#include "niemeier/forms3.hpp"
#include "niemeier/verify.hpp"
#include "oracles.hpp"

using namespace niemeier;

namespace {

ThetaContext& shared_context() {
    static ThetaContext ctx;
    return ctx;
}

} // namespace

class Identity : public ::testing::TestWithParam<std::string> {};

TEST_P(Identity, EnumerationMatchesFormulaOnSturmBox) {
    for (int degree = 1; degree <= 3; ++degree) {
        const IdentityReport r = verify_identity(shared_context(), GetParam(), degree);
        EXPECT_TRUE(r.holds()) << GetParam() << " degree " << degree << ": " << r.mismatches.size()
                               << " mismatches";
        EXPECT_EQ(r.box_size, sturm_box(degree, 12).size());
    }
}

INSTANTIATE_TEST_SUITE_P(AllTwentyFour, Identity, ::testing::ValuesIn(niemeier_names()),
                         [](const auto& info) { return info.param; });

TEST(Coincidences, EqualCoxeterNumbersGiveEqualSeries) {
    ThetaContext& ctx = shared_context();
    const Box box = sturm_box(3, 12);
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"beta", "gamma"}, {"zeta", "eta"}, {"lambda", "mu"}, {"nu", "xi"}, {"sigma", "tau"}}) {
        EXPECT_EQ(ctx.theta(a, 3, box), ctx.theta(b, 3, box)) << a << " vs " << b;
        EXPECT_NE(ctx.lattice(a).components_string(), ctx.lattice(b).components_string());
    }
}

TEST(Congruence, TheTwoChainsModulo23) {
    ThetaContext& ctx = shared_context();
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"alpha", "[4,2,6]"}, {"alpha", "omega"}, {"[4,2,6]", "omega"},
             {"delta", "[2,2,12]"}, {"delta", "psi"}, {"[2,2,12]", "psi"}}) {
        const CongruenceCertificate c = certify_congruence(ctx, a, b, 23);
        EXPECT_EQ(c.verdict, Verdict::certified) << a << " vs " << b;
        EXPECT_EQ(c.weight, 12);
        EXPECT_EQ(c.records.size(), sturm_box(3, 12).size());
    }
}

TEST(Congruence, RefutationCarriesAWitness) {
    const CongruenceCertificate c = certify_congruence(shared_context(), "alpha", "delta", 23);
    EXPECT_EQ(c.verdict, Verdict::refuted);
    ASSERT_TRUE(c.witness);
    EXPECT_NE(c.witness->lhs, c.witness->rhs);
}

TEST(Congruence, SmallBoxIsInconclusive) {
    const CongruenceCertificate c = certify_congruence(shared_context(), "alpha", "omega", 23, 3, 0);
    EXPECT_EQ(c.verdict, Verdict::inconclusive);
    EXPECT_FALSE(c.notes.empty());
}

TEST(Congruence, BinaryFormWeightNeedsItsOwnPrime) {
    ThetaContext& ctx = shared_context();
    EXPECT_EQ(effective_weight(ctx, "[4,2,6]", 23, 3), 12);
    EXPECT_EQ(effective_weight(ctx, "[4,2,6]", 5, 3), 1);
    EXPECT_EQ(effective_weight(ctx, "alpha", 5, 3), 12);
    EXPECT_THROW(certify_congruence(ctx, "alpha", "[4,2,6]", 5), WeightMismatch);
}

TEST(Congruence, ModuloOneIsTrivial) {
    EXPECT_EQ(certify_congruence(shared_context(), "alpha", "kappa", 1).verdict, Verdict::certified);
}

TEST(Sweep, CertifiesExactlyTheCongruentCoxeterNumbers) {
    const auto sweep = coxeter_congruence_sweep(shared_context(), 23);
    ASSERT_EQ(sweep.size(), 276u);
    std::size_t certified = 0;
    for (const auto& e : sweep) {
        const bool congruent = (e.h_lhs - e.h_rhs) % 23 == 0;
        EXPECT_EQ(e.verdict == Verdict::certified, congruent) << e.lhs << " " << e.rhs;
        EXPECT_NE(e.verdict, Verdict::inconclusive);
        certified += e.verdict == Verdict::certified;
    }
    // classes of h mod 23 with more than one member: {alpha, omega}, {beta, gamma, rho},
    // {delta, psi} and the five equal-h pairs
    EXPECT_EQ(certified, 9u);
}

TEST(Singular, RankTwoWitnesses) {
    ThetaContext& ctx = shared_context();
    for (const auto* form : {"alpha", "omega", "[4,2,6]"}) {
        const SingularRankReport r = singular_rank_mod_p(ctx, form, 23);
        EXPECT_TRUE(r.singular()) << form;
        EXPECT_EQ(r.rank, 2) << form;
        ASSERT_TRUE(r.witness) << form;
        EXPECT_EQ(r.witness->t.truncated(), IndexMatrix::bracket(2, 1, 3)) << form;
        EXPECT_EQ(r.witness->rhs, 2) << form;
    }
    for (const auto* form : {"delta", "psi", "[2,2,12]"}) {
        const SingularRankReport r = singular_rank_mod_p(ctx, form, 23);
        EXPECT_TRUE(r.singular()) << form;
        EXPECT_EQ(r.rank, 2) << form;
        ASSERT_TRUE(r.witness) << form;
        EXPECT_EQ(r.witness->t.truncated(), IndexMatrix::bracket(1, 1, 6)) << form;
        EXPECT_EQ(r.witness->rhs, 4) << form;
    }
}

// The residue at [1,1,6] for the A1^24 lattice, from the Golay weight enumerator.
TEST(Singular, PsiWitnessResidueFromGolayCode) {
    const mpz_class pairs = oracle::a1_24_root_pairs(6);
    EXPECT_EQ(mpz_class(pairs % 23), 4);
    const IndexMatrix t = IndexMatrix::bracket(1, 1, 6);
    EXPECT_EQ(theta2_via_formula(2, {t}).at(t), Rational(BigInt(pairs)));
}

TEST(Singular, GammaHasFullRank) {
    const SingularRankReport r = singular_rank_mod_p(shared_context(), "gamma", 23);
    EXPECT_EQ(r.verdict, Verdict::certified);
    EXPECT_EQ(r.rank, 3);
    EXPECT_FALSE(r.singular());
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->t.rank(), 3);
}

TEST(ThetaKernel, SingularFormsPassAndGammaFails) {
    ThetaContext& ctx = shared_context();
    for (const auto* form : {"alpha", "omega", "delta", "psi", "[4,2,6]", "[2,2,12]"}) {
        EXPECT_TRUE(theta_kernel_check(ctx, form, 23).passes()) << form;
    }
    const ThetaKernelReport g = theta_kernel_check(ctx, "gamma", 23);
    EXPECT_FALSE(g.passes());
    ASSERT_TRUE(g.witness);
    EXPECT_NE(g.witness->rhs, 0);
    EXPECT_EQ(residue_mod(Rational(g.witness->t.det_twice()) * Rational(g.witness->lhs), 23), g.witness->rhs);
}

TEST(ThetaKernel, ConsistentWithSingularRankForEveryLattice) {
    ThetaContext& ctx = shared_context();
    for (const auto& name : niemeier_names()) {
        const SingularRankReport s = singular_rank_mod_p(ctx, name, 23);
        if (s.singular()) {
            EXPECT_TRUE(theta_kernel_check(ctx, name, 23).passes()) << name;
        }
    }
}

TEST(Reports, JsonShapes) {
    ThetaContext& ctx = shared_context();
    const auto c = to_json(certify_congruence(ctx, "alpha", "omega", 23));
    EXPECT_EQ(c.at("verdict"), "certified");
    EXPECT_EQ(c.at("modulus"), 23);
    const auto s = to_json(singular_rank_mod_p(ctx, "alpha", 23));
    EXPECT_EQ(s.at("rank"), 2);
    const std::string tables = congruence_tables(ctx);
    EXPECT_NE(tables.find("781393536"), std::string::npos);
    EXPECT_NE(tables.find("127512000"), std::string::npos);
}
