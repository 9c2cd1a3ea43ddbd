// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "niemeier/eisenstein.hpp"
#include "niemeier/enumeration.hpp"
#include "niemeier/forms3.hpp"
#include "niemeier/verify.hpp"

using namespace niemeier;

namespace {

class Check {
public:
    template <typename A, typename B>
    void equal(const A& actual, const B& expected, const std::string& what) {
        if (!(actual == expected)) {
            std::ostringstream os;
            os << what << ": got " << actual << ", expected " << expected;
            failures_.push_back(os.str());
        }
    }
    void that(bool ok, const std::string& what) {
        if (!ok) {
            failures_.push_back(what);
        }
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

void criterion1(ThetaContext& ctx, Check& c) {
    const std::map<std::string, std::uint64_t> roots{{"alpha", 1104}, {"delta", 600}, {"psi", 48}, {"omega", 0}};
    for (const auto& name : niemeier_names()) {
        const NiemeierDescriptor& d = ctx.lattice(name);
        c.equal(d.gram.determinant(), BigInt(1), name + " det");
        c.that(d.gram.is_even(), name + " even");
        const auto counts = count_by_norm(d.gram, 2);
        c.equal(counts[2], 24u * static_cast<std::uint64_t>(catalog_coxeter_number(name)), name + " roots");
        if (roots.contains(name)) {
            c.equal(counts[2], roots.at(name), name + " root count");
        }
    }
}

void criterion2(ThetaContext& ctx, Check& c) {
    const std::vector<IndexMatrix> t2{IndexMatrix::bracket(1, 0, 0), IndexMatrix::bracket(1, 1, 1),
                                      IndexMatrix::bracket(1, 0, 1)};
    const std::vector<IndexMatrix> t3{IndexMatrix::bracket(1, 1, 1, 1, 1, 1), IndexMatrix::bracket(1, 1, 1, 0, 0, 1),
                                      IndexMatrix::bracket(1, 1, 1, 0, 0, 0)};
    const std::vector<std::pair<std::string, std::array<std::uint64_t, 3>>> deg2{
        {"alpha", {1104, 97152, 1022304}}, {"delta", {600, 27600, 303600}}, {"psi", {48, 0, 2208}},
        {"[2,2,12]", {2, 0, 0}},            {"[4,2,6]", {0, 0, 0}},          {"omega", {0, 0, 0}}};
    const std::vector<std::pair<std::string, std::array<std::uint64_t, 3>>> deg3{
        {"alpha", {4177536, 81607680, 781393536}}, {"delta", {607200, 12751200, 127512000}},
        {"psi", {0, 0, 97152}},                    {"omega", {0, 0, 0}},
        {"[4,2,6]", {0, 0, 0}},                    {"[2,2,12]", {0, 0, 0}}};
    for (const auto& [form, values] : deg2) {
        for (std::size_t i = 0; i < 3; ++i) {
            c.equal(ctx.theta_coefficient(form, t2[i]), values[i], form + " " + t2[i].bracket_string());
        }
    }
    for (const auto& [form, values] : deg3) {
        for (std::size_t i = 0; i < 3; ++i) {
            c.equal(ctx.theta_coefficient(form, t3[i]), values[i], form + " " + t3[i].bracket_string());
        }
    }
}

void criterion3(ThetaContext& ctx, Check& c) {
    const Degree3Basis& b = ctx.degree3_basis();
    const std::vector<std::tuple<IndexMatrix, long, long, long>> rows{
        {IndexMatrix::bracket(1, 1, 1, 1, 1, 1), 1, 1, 1},
        {IndexMatrix::bracket(1, 1, 1, 0, 0, 1), 84, 7674, 18},
        {IndexMatrix::bracket(1, 1, 1, 0, 0, 0), 1132, 114476, 164},
    };
    for (const auto& [t, x, y, f] : rows) {
        c.equal(b.x12.at(t), Rational(x), "X12 " + t.bracket_string());
        c.equal(b.y12.at(t), Rational(y), "Y12 " + t.bracket_string());
        c.equal(b.f12.at(t), Rational(f), "F12 " + t.bracket_string());
    }
    const Box box = sturm_box(3, 12);
    for (const auto* f : {&b.e4cubed, &b.y12, &b.x12, &b.f12}) {
        c.equal(f->size(), box.size(), "basis covers the Sturm box");
        c.that(f->is_integral(), "basis coefficients integral");
    }
}

void criterion4(ThetaContext& ctx, Check& c) {
    const Box box2 = diagonal_box(2, 1);
    const Rederivation r =
        rederive_c_coefficients(e4_cubed(box2), igusa_Y12_deg2(box2), igusa_X12_deg2(box2), ctx.degree3_basis());
    c.equal(r.y3, Rational(169632), "Y12 degree-3 restriction");
    c.equal(r.x3, Rational(1728), "X12 degree-3 restriction");
    c.equal(r.f3, Rational(288), "F12 degree-3 restriction");
    c.equal(r.e4cubed3, Rational(373248000), "E4^3 degree-3 restriction");
    c.equal(r.y2, Rational(1440), "Y12 degree-2 restriction");
    c.equal(r.x2, Rational(12), "X12 degree-2 restriction");
    c.equal(r.e4cubed2, Rational(518400), "E4^3 degree-2 restriction");
    c.equal(r.c1.to_string(), std::string("48h^2 - 2880h + 43200"), "c1");
    c.equal(r.c2.to_string(), std::string("48h^3 - 288h^2 + 3144h - 1131120"), "c2");
    const Polynomial h = Polynomial::variable();
    const Polynomial misprint = Rational(48) * h * h - Rational(2800) * h + Polynomial::constant(43200);
    c.that(misprint(Rational(46)) != Rational(coefficient_values(46).c1), "2800 variant contradicts the D24 row");
    c.equal(coefficient_values(46).c1, BigInt(12288), "D24 row c1");
}

void criterion5(ThetaContext& ctx, Check& c) {
    for (const auto& name : niemeier_names()) {
        for (int degree = 1; degree <= 3; ++degree) {
            const IdentityReport r = verify_identity(ctx, name, degree);
            c.that(r.holds(), name + " degree " + std::to_string(degree) + " identity");
            c.equal(r.box_size, sturm_box(degree, 12).size(), name + " box size");
        }
    }
    const Box box = sturm_box(3, 12);
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"beta", "gamma"}, {"zeta", "eta"}, {"lambda", "mu"}, {"nu", "xi"}, {"sigma", "tau"}}) {
        c.that(ctx.theta(a, 3, box) == ctx.theta(b, 3, box), a + " = " + b);
        c.that(ctx.lattice(a).components_string() != ctx.lattice(b).components_string(), a + ", " + b + " distinct");
    }
}

void criterion6(ThetaContext& ctx, Check& c) {
    for (const auto& chain : std::vector<std::vector<std::string>>{{"alpha", "[4,2,6]", "omega"},
                                                                    {"delta", "[2,2,12]", "psi"}}) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            for (std::size_t j = i + 1; j < chain.size(); ++j) {
                const CongruenceCertificate cert = certify_congruence(ctx, chain[i], chain[j], 23);
                c.equal(to_string(cert.verdict), std::string("certified"), chain[i] + " = " + chain[j] + " mod 23");
            }
        }
    }
    for (const auto& e : coxeter_congruence_sweep(ctx, 23)) {
        const bool congruent = (e.h_lhs - e.h_rhs) % 23 == 0;
        c.equal(to_string(e.verdict), std::string(congruent ? "certified" : "refuted"), "sweep " + e.lhs + ", " + e.rhs);
    }
    const IndexMatrix t = IndexMatrix::bracket(3, 1, 2);
    const Rational a30 = theta2_via_formula(30, {t}).at(t);
    const Rational a7 = theta2_via_formula(7, {t}).at(t);
    c.equal(a30, Rational(BigInt("749432632320")), "h = 30 at [3,1,2]");
    c.equal(a7, Rational(BigInt("799943308416")), "h = 7 at [3,1,2]");
    c.equal(residue_mod(a30, 23), residue_mod(a7, 23), "[3,1,2] residues mod 23");
}

void criterion7(ThetaContext& ctx, Check& c) {
    const std::vector<std::pair<std::string, IndexMatrix>> expected{{"alpha", IndexMatrix::bracket(2, 1, 3)},
                                                                     {"omega", IndexMatrix::bracket(2, 1, 3)},
                                                                     {"delta", IndexMatrix::bracket(1, 1, 6)},
                                                                     {"psi", IndexMatrix::bracket(1, 1, 6)}};
    for (const auto& [form, t] : expected) {
        const SingularRankReport r = singular_rank_mod_p(ctx, form, 23);
        c.equal(r.rank, 2, form + " 23-rank");
        c.that(r.singular(), form + " singular mod 23");
        if (!r.witness) {
            c.that(false, form + " witness present");
            continue;
        }
        c.equal(r.witness->t.truncated().bracket_string(), t.bracket_string(), form + " witness");
        c.equal(r.witness->rhs, std::int64_t{2}, form + " residue at " + t.bracket_string());
        c.that(theta_kernel_check(ctx, form, 23).passes(), form + " Theta kernel");
    }
    const ThetaKernelReport g = theta_kernel_check(ctx, "gamma", 23);
    c.that(!g.passes() && g.witness && g.witness->rhs != 0, "gamma fails the Theta kernel with a witness");
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-1, 1);
    for (std::size_t step = 0; step < 3 * n; ++step) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        if (i == j) {
            u.swap_rows(i, (i + 1) % n);
            continue;
        }
        const int k = coeff(rng);
        for (std::size_t col = 0; col < n; ++col) {
            u(i, col) += k * u(j, col);
        }
    }
    return u;
}

void criterion8(ThetaContext& ctx, Check& c) {
    const GramMatrix e8 = root_gram({'E', 8});
    for (int degree = 1; degree <= 3; ++degree) {
        const Box box = diagonal_box(degree, degree == 1 ? 3 : 1);
        const FourierExpansion t8 = theta_expansion(e8, degree, box);
        const FourierExpansion cube = multiply(multiply(t8, t8, box), t8, box);
        c.that(cube == ctx.theta("gamma", degree, box), "E8^3 = gamma in degree " + std::to_string(degree));
    }
    for (const auto& name : niemeier_names()) {
        const FourierExpansion f3 = ctx.theta(name, 3, diagonal_box(3, 1));
        const FourierExpansion f2 = ctx.theta(name, 2, diagonal_box(2, 1));
        const FourierExpansion f1 = ctx.theta(name, 1, diagonal_box(1, 1));
        c.that(siegel_operator(f3) == f2 && siegel_operator(f2) == f1, name + " Phi chain");
    }
    std::mt19937_64 rng(20240615);
    for (const auto& name : niemeier_names()) {
        const GramMatrix& g = ctx.lattice(name).gram;
        const auto ref = count_by_norm(g, 2);
        for (int trial = 0; trial < 10; ++trial) {
            const auto counts = count_by_norm(conjugate(g, random_unimodular(24, rng)), 2);
            c.that(counts == ref, name + " basis change " + std::to_string(trial));
        }
    }
    const Box box = sturm_box(3, 12);
    std::vector<Anchor> anchors;
    for (const auto* name : {"omega", "psi", "gamma", "alpha"}) {
        anchors.push_back({catalog_coxeter_number(name), ctx.theta(name, 3, box)});
    }
    c.that(lagrange_reconstruct(catalog_coxeter_number("chi"), anchors) == ctx.theta("chi", 3, box),
           "chi from omega, psi, gamma, alpha");
}

} // namespace

int main() {
    ThetaContext ctx;
    const std::vector<std::pair<std::string, std::function<void(ThetaContext&, Check&)>>> criteria{
        {"catalog validity", criterion1},
        {"degree-2 and degree-3 coefficient tables", criterion2},
        {"degree-3 basis spot values and integrality", criterion3},
        {"diagonal restrictions and c1, c2", criterion4},
        {"identity on Sturm boxes and equal-h coincidences", criterion5},
        {"mod-23 congruence certificates", criterion6},
        {"mod-23 singularity and Theta kernel", criterion7},
        {"property suites", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(ctx, check);
        } catch (const std::exception& e) {
            check.that(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = check.failures().empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(1) << secs << " s)\n";
        for (const auto& f : check.failures()) {
            std::cout << "    " << f << '\n';
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
