#include "niemeier/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>

namespace niemeier {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    const auto f = factorize(n);
    return f.size() == 1 && f.front().second == 1;
}

nlohmann::json index_json(const IndexMatrix& t) {
    return {{"T", t.encoding()}, {"bracket", t.bracket_string()}};
}

nlohmann::json rational_json(const Rational& r) {
    return {{"num", rational_part_json(r.num())}, {"den", rational_part_json(r.den())}};
}

nlohmann::json record_json(const ResidueRecord& r) {
    nlohmann::json j = index_json(r.t);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    return j;
}

Box degree_sturm_box(int degree) { return sturm_box(degree, 12); }

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::certified:
        return "certified";
    case Verdict::refuted:
        return "refuted";
    default:
        return "inconclusive";
    }
}

IdentityReport verify_identity(ThetaContext& ctx, const std::string& name, int degree) {
    IdentityReport r;
    r.form = ThetaContext::canonical_form(name);
    r.degree = degree;
    r.h = ctx.coxeter_number(r.form).value();
    const Box box = degree_sturm_box(degree);
    r.box_size = box.size();
    const FourierExpansion enumerated = ctx.theta(r.form, degree, box);
    const FourierExpansion formula = ctx.formula(r.form, degree, box);
    for (const auto& t : box) {
        if (enumerated.at(t) != formula.at(t)) {
            r.mismatches.push_back({t, enumerated.at(t), formula.at(t)});
        }
    }
    return r;
}

std::int64_t effective_weight(ThetaContext& ctx, const std::string& form, std::int64_t m, int degree) {
    const std::string key = ThetaContext::canonical_form(form);
    if (ThetaContext::is_lattice(key)) {
        return ctx.weight(key);
    }
    const BigInt det = ctx.gram(key).determinant();
    if (det == m && is_prime(m) && m % 4 == 3 && m >= 2 * degree + 3) {
        return (m + 1) / 2;
    }
    return ctx.weight(key);
}

CongruenceCertificate certify_congruence(ThetaContext& ctx, const std::string& lhs, const std::string& rhs,
                                         std::int64_t m, int degree, std::optional<std::int64_t> max_tii) {
    if (m < 1) {
        throw std::invalid_argument("certify_congruence: modulus must be positive");
    }
    CongruenceCertificate c;
    c.lhs = ThetaContext::canonical_form(lhs);
    c.rhs = ThetaContext::canonical_form(rhs);
    c.modulus = m;
    c.degree = degree;
    const std::int64_t wl = effective_weight(ctx, c.lhs, m, degree);
    const std::int64_t wr = effective_weight(ctx, c.rhs, m, degree);
    if (wl != wr) {
        throw WeightMismatch("certify_congruence: weights " + std::to_string(wl) + " and " + std::to_string(wr) +
                             " differ; the Sturm bound does not apply");
    }
    c.weight = wl;
    for (const auto& f : {c.lhs, c.rhs}) {
        if (!ThetaContext::is_lattice(f) && ctx.weight(f) != wl) {
            c.notes.push_back(f + " is congruent mod " + std::to_string(m) + " to a weight-" + std::to_string(wl) +
                              " form (binary form with det(2S) = " + std::to_string(m) + ")");
        }
    }
    if (!is_prime(m) && m > 1) {
        c.notes.push_back("composite modulus: certified through its prime-power factors");
    }
    c.sturm_bound = sturm_bound(degree, c.weight);
    c.box_max_tii = max_tii.value_or(c.sturm_bound);
    const Box box = diagonal_box(degree, c.box_max_tii);
    const FourierExpansion f = ctx.theta(c.lhs, degree, box);
    const FourierExpansion g = ctx.theta(c.rhs, degree, box);
    for (const auto& t : box) {
        ResidueRecord r{t, residue_mod(f.at(t), m), residue_mod(g.at(t), m)};
        if (r.lhs != r.rhs && !c.witness) {
            c.witness = r;
        }
        c.records.push_back(r);
    }
    if (c.witness) {
        c.verdict = Verdict::refuted;
    } else if (c.box_max_tii >= c.sturm_bound) {
        c.verdict = Verdict::certified;
    } else {
        c.verdict = Verdict::inconclusive;
        c.notes.push_back("box t_ii <= " + std::to_string(c.box_max_tii) + " does not contain the Sturm box t_ii <= " +
                          std::to_string(c.sturm_bound));
    }
    return c;
}

namespace {

struct Candidate {
    IndexMatrix t;  // degree 3
    Rational value;
    std::string source;
};

auto candidate_key(const IndexMatrix& t) {
    return std::make_tuple(t.trace(), t.t(0), -t.twice(0, 1), -t.twice(0, 2), -t.twice(1, 2), t.t(1), t.t(2));
}

} // namespace

SingularRankReport singular_rank_mod_p(ThetaContext& ctx, const std::string& form, std::int64_t p) {
    SingularRankReport r;
    r.form = ThetaContext::canonical_form(form);
    r.p = p;
    r.degree = 3;
    const Box box = degree_sturm_box(3);
    const FourierExpansion f = ctx.theta(r.form, 3, box);

    for (const auto& t : box) {
        if (t.rank() == 3) {
            ++r.checked_full_rank;
            const std::int64_t res = residue_mod(f.at(t), p);
            if (res != 0 && !r.witness) {
                r.witness = ResidueRecord{t, 0, res};
                r.witness_source = "enumerated";
            }
        }
    }
    if (r.witness) {
        r.rank = 3;
        r.verdict = Verdict::certified;
        return r;
    }

    std::vector<Candidate> candidates;
    for (const auto& t : box) {
        if (t.rank() < 3) {
            candidates.push_back({t, f.at(t), "enumerated"});
        }
    }
    const std::vector<std::int64_t> bounds{2, 6};
    Box embedded;
    for (const auto& t : diagonal_box(bounds)) {
        if (!box_contains(box, t.extended())) {
            embedded.push_back(t);
        }
    }
    FourierExpansion g;
    std::string source;
    if (ThetaContext::is_lattice(r.form)) {
        g = ctx.formula(r.form, 2, embedded);
        source = "degree-2 formula";
    } else {
        g = ctx.theta(r.form, 2, embedded);
        source = "degree-2 enumerated";
    }
    for (const auto& t : embedded) {
        candidates.push_back({t.extended(), g.at(t), source});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return candidate_key(a.t) < candidate_key(b.t); });
    r.scanned_lower_rank = candidates.size();
    for (int rank = 2; rank >= 0 && !r.witness; --rank) {
        for (const auto& c : candidates) {
            if (c.t.rank() != rank) {
                continue;
            }
            const std::int64_t res = residue_mod(c.value, p);
            if (res != 0) {
                r.witness = ResidueRecord{c.t, 0, res};
                r.witness_source = c.source;
                r.rank = rank;
                break;
            }
        }
    }
    r.verdict = r.witness ? Verdict::certified : Verdict::inconclusive;
    return r;
}

ThetaKernelReport theta_kernel_check(ThetaContext& ctx, const std::string& form, std::int64_t p, int degree) {
    ThetaKernelReport r;
    r.form = ThetaContext::canonical_form(form);
    r.p = p;
    r.degree = degree;
    const Box sturm = degree_sturm_box(degree);
    FourierExpansion values = ctx.theta(r.form, degree, sturm);
    if (degree == 2) {
        Box extra;
        for (const auto& t : diagonal_box(2, 3)) {
            if (!box_contains(sturm, t)) {
                extra.push_back(t);
            }
        }
        const FourierExpansion more =
            ThetaContext::is_lattice(r.form) ? ctx.formula(r.form, 2, extra) : ctx.theta(r.form, 2, extra);
        for (const auto& [t, v] : more.coefficients()) {
            values.set(t, v);
        }
    } else if (degree != 3) {
        throw std::invalid_argument("theta_kernel_check: degree 2 or 3");
    }
    for (const auto& [t, v] : values.coefficients()) {
        ++r.checked;
        const std::int64_t scaled = residue_mod(v * Rational(t.det_twice()), p);
        if (scaled != 0 && !r.witness) {
            r.witness = ResidueRecord{t, residue_mod(v, p), scaled};
        }
    }
    return r;
}

std::vector<SweepEntry> coxeter_congruence_sweep(ThetaContext& ctx, std::int64_t m) {
    std::vector<SweepEntry> out;
    const auto& names = niemeier_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const auto c = certify_congruence(ctx, names[i], names[j], m, 3);
            out.push_back({names[i], names[j], catalog_coxeter_number(names[i]), catalog_coxeter_number(names[j]),
                           c.verdict});
        }
    }
    return out;
}

nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json mism = nlohmann::json::array();
    for (const auto& m : r.mismatches) {
        nlohmann::json j = index_json(m.t);
        j["enumerated"] = rational_json(m.enumerated);
        j["formula"] = rational_json(m.formula);
        mism.push_back(j);
    }
    return {{"form", r.form}, {"degree", r.degree},     {"h", r.h},
            {"box_size", r.box_size}, {"holds", r.holds()}, {"mismatches", mism}};
}

nlohmann::json to_json(const CongruenceCertificate& c) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : c.records) {
        records.push_back(record_json(r));
    }
    nlohmann::json j = {{"lhs", c.lhs},
                        {"rhs", c.rhs},
                        {"modulus", c.modulus},
                        {"degree", c.degree},
                        {"weight", c.weight},
                        {"sturm_bound", c.sturm_bound},
                        {"box_max_tii", c.box_max_tii},
                        {"verdict", to_string(c.verdict)},
                        {"records", records},
                        {"notes", c.notes}};
    j["witness"] = c.witness ? record_json(*c.witness) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const SingularRankReport& r) {
    nlohmann::json j = {{"form", r.form},
                        {"p", r.p},
                        {"degree", r.degree},
                        {"rank", r.rank},
                        {"singular", r.singular()},
                        {"checked_full_rank", r.checked_full_rank},
                        {"scanned_lower_rank", r.scanned_lower_rank},
                        {"verdict", to_string(r.verdict)},
                        {"scope", "degree-3 Sturm box plus embedded degree-2 indices t11 <= 2, t22 <= 6"}};
    if (r.witness) {
        nlohmann::json w = index_json(r.witness->t);
        w["residue"] = r.witness->rhs;
        w["source"] = r.witness_source;
        if (r.witness->t.last_row_zero()) {
            w["degree2"] = r.witness->t.truncated().bracket_string();
        }
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const ThetaKernelReport& r) {
    nlohmann::json j = {{"form", r.form}, {"p", r.p}, {"degree", r.degree}, {"checked", r.checked}, {"passes", r.passes()}};
    if (r.witness) {
        nlohmann::json w = index_json(r.witness->t);
        w["coefficient_residue"] = r.witness->lhs;
        w["scaled_residue"] = r.witness->rhs;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const std::vector<SweepEntry>& sweep, std::int64_t m) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& e : sweep) {
        pairs.push_back({{"lhs", e.lhs},
                         {"rhs", e.rhs},
                         {"h_lhs", e.h_lhs},
                         {"h_rhs", e.h_rhs},
                         {"h_congruent", (e.h_lhs - e.h_rhs) % m == 0},
                         {"verdict", to_string(e.verdict)}});
    }
    return {{"modulus", m}, {"pairs", pairs}};
}

std::string congruence_tables(ThetaContext& ctx) {
    struct Chain {
        std::string binary;
        std::string first;
        std::string second;
    };
    const std::vector<Chain> chains{{"[4,2,6]", "alpha", "omega"}, {"[2,2,12]", "delta", "psi"}};
    const std::vector<IndexMatrix> rows2{IndexMatrix::bracket(0, 0, 0), IndexMatrix::bracket(1, 0, 0),
                                         IndexMatrix::bracket(1, 1, 1), IndexMatrix::bracket(1, 0, 1)};
    const std::vector<IndexMatrix> rows3{IndexMatrix::bracket(1, 1, 1, 1, 1, 1), IndexMatrix::bracket(1, 1, 1, 0, 0, 1),
                                         IndexMatrix::bracket(1, 1, 1, 0, 0, 0)};
    auto label = [](const std::string& form) {
        return ThetaContext::is_lattice(form) ? catalog_symbol(form) : form;
    };
    auto row_label = [](const IndexMatrix& t) {
        return t.rank() == 0 && t.degree() == 2 ? std::string("[0,0,0]") : t.bracket_string();
    };
    std::ostringstream os;
    for (const auto& chain : chains) {
        for (int degree : {2, 3}) {
            const auto& rows = degree == 2 ? rows2 : rows3;
            os << std::left << std::setw(16) << "T";
            for (const auto& f : {chain.binary, chain.first, chain.second}) {
                os << std::right << std::setw(18) << ("a(" + label(f) + ";T)");
            }
            os << "   degree " << degree << '\n';
            for (const auto& t : rows) {
                os << std::left << std::setw(16) << row_label(t);
                for (const auto& f : {chain.binary, chain.first, chain.second}) {
                    os << std::right << std::setw(18) << ctx.theta_coefficient(f, t);
                }
                os << '\n';
            }
            os << '\n';
        }
    }
    return os.str();
}

} // namespace niemeier
