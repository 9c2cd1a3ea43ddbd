#include "niemeier_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "niemeier/eisenstein.hpp"
#include "niemeier/verify.hpp"

namespace niemeier::cli {

namespace {

struct Options {
    std::string lattice;
    bool all = false;
    int degree = 0;
    std::int64_t modulus = 23;
    std::optional<std::int64_t> max_tii;
    std::uint64_t budget = Budget{}.max_vectors;
    std::string cache;
    std::string format = "json";
    std::vector<std::string> forms;
    std::string out_dir = ".";
};

ContextOptions context_options(const Options& o) {
    ContextOptions c;
    c.budget.max_vectors = o.budget;
    c.budget.max_nodes = o.budget * 200;
    c.cache_dir = o.cache;
    return c;
}

std::vector<std::string> selected_forms(const Options& o) {
    if (o.all || o.lattice == "all") {
        return niemeier_names();
    }
    if (o.lattice.empty()) {
        throw std::invalid_argument("select a form with --lattice <name|all> or --all");
    }
    return {ThetaContext::canonical_form(o.lattice)};
}

const std::string kShield = "\x1f";

std::string unshield(const std::string& s) { return s.starts_with(kShield) ? s.substr(kShield.size()) : s; }

bool json_output(const Options& o) { return o.format == "json"; }

std::string signed_term(const BigInt& v, const char* symbol) {
    std::ostringstream os;
    os << (v >= 0 ? "+" : "-") << BigInt(abs(v)).get_str() << symbol;
    return os.str();
}

int cmd_list(const Options& o, std::ostream& out) {
    if (json_output(o)) {
        out << table1_json().dump(2) << '\n';
        return kOk;
    }
    for (const auto& name : niemeier_names()) {
        const std::int64_t h = catalog_coxeter_number(name);
        const CoefficientValues c = coefficient_values(h);
        out << std::left << std::setw(8) << name << ' ' << catalog_symbol(name) << "  "
            << components_label(catalog_components(name)) << ", h=" << h << ", " << signed_term(c.c0, "Y") << ' '
            << signed_term(c.c1, "X") << ' ' << signed_term(c.c2, "F") << '\n';
    }
    return kOk;
}

int cmd_theta(const Options& o, std::ostream& out) {
    ThetaContext ctx(context_options(o));
    const int degree = o.degree == 0 ? 1 : o.degree;
    const std::int64_t bound = o.max_tii.value_or(sturm_bound(degree, 12));
    const Box box = diagonal_box(degree, bound);
    nlohmann::json result = nlohmann::json::object();
    std::vector<std::pair<std::string, FourierExpansion>> expansions;
    for (const auto& form : selected_forms(o)) {
        expansions.emplace_back(form, ctx.theta(form, degree, box));
    }
    ctx.flush_cache();
    if (json_output(o)) {
        if (expansions.size() == 1) {
            out << to_json(expansions.front().second).dump(2) << '\n';
        } else {
            for (const auto& [form, f] : expansions) {
                result[form] = to_json(f);
            }
            out << result.dump(2) << '\n';
        }
        return kOk;
    }
    for (const auto& [form, f] : expansions) {
        out << form << " degree " << degree << '\n';
        for (const auto& [t, v] : f.coefficients()) {
            out << "  " << std::left << std::setw(18) << t.bracket_string() << v << '\n';
        }
    }
    return kOk;
}

int cmd_verify_identity(const Options& o, std::ostream& out) {
    ThetaContext ctx(context_options(o));
    std::vector<int> degrees;
    if (o.degree == 0) {
        degrees = {1, 2, 3};
    } else {
        degrees = {o.degree};
    }
    nlohmann::json reports = nlohmann::json::array();
    bool ok = true;
    for (const auto& form : selected_forms(o)) {
        for (const int d : degrees) {
            const IdentityReport r = verify_identity(ctx, form, d);
            ok = ok && r.holds();
            if (json_output(o)) {
                reports.push_back(to_json(r));
            } else {
                out << std::left << std::setw(8) << r.form << " degree " << d << ": "
                    << (r.holds() ? "holds" : "FAILS") << " on " << r.box_size << " indices\n";
            }
        }
    }
    ctx.flush_cache();
    if (json_output(o)) {
        out << reports.dump(2) << '\n';
    }
    return ok ? kOk : kRefuted;
}

int verdict_code(Verdict v) {
    switch (v) {
    case Verdict::certified:
        return kOk;
    case Verdict::refuted:
        return kRefuted;
    default:
        return kInconclusive;
    }
}

int cmd_verify_congruence(const Options& o, std::ostream& out) {
    if (o.forms.size() != 2) {
        throw std::invalid_argument("verify congruence needs exactly two forms");
    }
    ThetaContext ctx(context_options(o));
    const int degree = o.degree == 0 ? 3 : o.degree;
    const CongruenceCertificate c = certify_congruence(ctx, o.forms[0], o.forms[1], o.modulus, degree, o.max_tii);
    ctx.flush_cache();
    if (json_output(o)) {
        out << to_json(c).dump(2) << '\n';
    } else {
        out << c.lhs << " = " << c.rhs << " mod " << c.modulus << " (degree " << c.degree << ", weight " << c.weight
            << ", box t_ii <= " << c.box_max_tii << ", Sturm bound " << c.sturm_bound << "): " << to_string(c.verdict)
            << '\n';
        if (c.witness) {
            out << "  witness " << c.witness->t.bracket_string() << ": " << c.witness->lhs << " vs " << c.witness->rhs
                << '\n';
        }
        for (const auto& n : c.notes) {
            out << "  note: " << n << '\n';
        }
    }
    return verdict_code(c.verdict);
}

int combine(int acc, int code) {
    if (acc == kRefuted || code == kRefuted) {
        return kRefuted;
    }
    return std::max(acc, code);
}

int cmd_verify_singular(const Options& o, std::ostream& out) {
    ThetaContext ctx(context_options(o));
    nlohmann::json reports = nlohmann::json::array();
    int code = kOk;
    std::vector<std::string> forms = o.forms;
    if (forms.empty()) {
        forms = selected_forms(o);
    }
    for (const auto& form : forms) {
        const SingularRankReport r = singular_rank_mod_p(ctx, form, o.modulus);
        const int c = r.verdict != Verdict::certified ? kInconclusive : (r.singular() ? kOk : kRefuted);
        code = combine(code, c);
        if (json_output(o)) {
            reports.push_back(to_json(r));
        } else {
            out << std::left << std::setw(8) << r.form << " mod " << r.p << ": rank " << r.rank;
            if (r.witness) {
                const IndexMatrix& t = r.witness->t;
                out << ", witness "
                    << (t.last_row_zero() && t.rank() < 3 ? t.truncated().bracket_string() : t.bracket_string())
                    << " residue " << r.witness->rhs << " (" << r.witness_source << ")";
            }
            out << (r.singular() ? ", singular" : ", not singular") << '\n';
        }
    }
    ctx.flush_cache();
    if (json_output(o)) {
        out << reports.dump(2) << '\n';
    }
    return code;
}

int cmd_verify_kernel(const Options& o, std::ostream& out) {
    ThetaContext ctx(context_options(o));
    const int degree = o.degree == 0 ? 2 : o.degree;
    nlohmann::json reports = nlohmann::json::array();
    bool ok = true;
    std::vector<std::string> forms = o.forms;
    if (forms.empty()) {
        forms = selected_forms(o);
    }
    for (const auto& form : forms) {
        const ThetaKernelReport r = theta_kernel_check(ctx, form, o.modulus, degree);
        ok = ok && r.passes();
        if (json_output(o)) {
            reports.push_back(to_json(r));
        } else {
            out << std::left << std::setw(8) << r.form << " Theta mod " << r.p << ": "
                << (r.passes() ? "vanishes" : "nonzero") << " on " << r.checked << " indices";
            if (r.witness) {
                out << ", witness " << r.witness->t.bracket_string() << " det(2T)a = " << r.witness->rhs;
            }
            out << '\n';
        }
    }
    ctx.flush_cache();
    if (json_output(o)) {
        out << reports.dump(2) << '\n';
    }
    return ok ? kOk : kRefuted;
}

int cmd_verify_sweep(const Options& o, std::ostream& out) {
    ThetaContext ctx(context_options(o));
    const auto sweep = coxeter_congruence_sweep(ctx, o.modulus);
    ctx.flush_cache();
    bool consistent = true;
    for (const auto& e : sweep) {
        const bool congruent_h = (e.h_lhs - e.h_rhs) % o.modulus == 0;
        if (congruent_h && e.verdict != Verdict::certified) {
            consistent = false;
        }
    }
    if (json_output(o)) {
        out << to_json(sweep, o.modulus).dump(2) << '\n';
    } else {
        for (const auto& e : sweep) {
            if (e.verdict == Verdict::certified) {
                out << e.lhs << " (h=" << e.h_lhs << ") = " << e.rhs << " (h=" << e.h_rhs << ") mod " << o.modulus
                    << '\n';
            }
        }
    }
    return consistent ? kOk : kRefuted;
}

int cmd_rederive(const Options& o, std::ostream& out) {
    ThetaContext ctx(context_options(o));
    const Box box2 = diagonal_box(2, 1);
    const Rederivation r =
        rederive_c_coefficients(e4_cubed(box2), igusa_Y12_deg2(box2), igusa_X12_deg2(box2), ctx.degree3_basis());
    ctx.flush_cache();
    if (json_output(o)) {
        nlohmann::json j = {
            {"degree2", {{"e4_cubed", r.e4cubed2.to_string()}, {"Y12", r.y2.to_string()}, {"X12", r.x2.to_string()}}},
            {"degree3",
             {{"e4_cubed", r.e4cubed3.to_string()},
              {"Y12", r.y3.to_string()},
              {"X12", r.x3.to_string()},
              {"F12", r.f3.to_string()}}},
            {"c1", r.c1.to_string()},
            {"c2", r.c2.to_string()},
        };
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "degree 2 diagonal restrictions at q11 q22: (E4)^3 " << r.e4cubed2 << ", Y12 " << r.y2 << ", X12 " << r.x2
        << '\n';
    out << "degree 3 diagonal restrictions at q11 q22 q33: (E4)^3 " << r.e4cubed3 << ", Y12 " << r.y3 << ", X12 "
        << r.x3 << ", F12 " << r.f3 << '\n';
    out << "c1(h) = " << r.c1.to_string() << '\n';
    out << "c2(h) = " << r.c2.to_string() << '\n';
    return kOk;
}

int cmd_export(const Options& o, std::ostream& out) {
    ThetaContext ctx(context_options(o));
    const std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);
    nlohmann::json lattices = nlohmann::json::array();
    for (const auto& name : niemeier_names()) {
        lattices.push_back(to_json(ctx.lattice(name)));
    }
    const std::vector<std::pair<std::string, nlohmann::json>> files{{"lattices.json", lattices},
                                                                     {"table1.json", table1_json()}};
    for (const auto& [file, j] : files) {
        const auto path = dir / file;
        std::ofstream f(path);
        f << j.dump(2) << '\n';
        if (!f) {
            throw std::runtime_error("cannot write " + path.string());
        }
        out << "wrote " << path.string() << '\n';
    }
    return kOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
    ThetaContext ctx(context_options(o));
    out << congruence_tables(ctx);
    ctx.flush_cache();
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Theta series of Niemeier lattices: enumeration, expressions and congruences", "niemeier"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--budget", o.budget, "Maximum number of stored lattice vectors (node cap is 200x)");
    app.add_option("--cache", o.cache, "Directory of the coefficient cache");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

    auto add_selection = [&](CLI::App* sub) {
        sub->add_option("--lattice", o.lattice, "Lattice name, binary form [a,b,c], or 'all'");
        sub->add_flag("--all", o.all, "All 24 Niemeier lattices");
    };
    auto add_box = [&](CLI::App* sub) {
        auto* opt = sub->add_option("--max-tii", o.max_tii, "Diagonal bound t_ii <= N of the index box");
        sub->add_option("--max-norm", o.max_tii, "Alias of --max-tii")->excludes(opt);
    };

    auto* list = app.add_subcommand("list", "Catalog with Coxeter numbers and coefficients (c0, c1, c2)");
    auto* theta = app.add_subcommand("theta", "Enumerated theta coefficients on a diagonal box");
    add_selection(theta);
    theta->add_option("--degree", o.degree, "Degree 1, 2 or 3")->check(CLI::Range(1, 3));
    add_box(theta);

    auto* verify = app.add_subcommand("verify", "Identity, congruence, singularity and theta-operator checks");
    verify->require_subcommand(1);
    auto* identity = verify->add_subcommand("identity", "Enumeration against the expression in h on the Sturm box");
    add_selection(identity);
    identity->add_option("--degree", o.degree, "Degree 1, 2 or 3 (default: all)")->check(CLI::Range(1, 3));

    auto* congruence = verify->add_subcommand("congruence", "Sturm-certified congruence of two theta series");
    congruence->add_option("forms", o.forms, "Two forms (lattice names or [a,b,c])")->expected(2);
    congruence->add_option("--mod", o.modulus, "Modulus")->check(CLI::PositiveNumber);
    congruence->add_option("--degree", o.degree, "Degree (default 3)")->check(CLI::Range(1, 3));
    add_box(congruence);

    auto* singular = verify->add_subcommand("singular", "Mod-p singular rank with a witness");
    add_selection(singular);
    singular->add_option("forms", o.forms, "Forms");
    singular->add_option("--mod", o.modulus, "Prime p")->check(CLI::PositiveNumber);

    auto* kernel = verify->add_subcommand("theta-kernel", "Theta(F) = 0 mod p on a box");
    add_selection(kernel);
    kernel->add_option("forms", o.forms, "Forms");
    kernel->add_option("--mod", o.modulus, "Prime p")->check(CLI::PositiveNumber);
    kernel->add_option("--degree", o.degree, "Degree 2 or 3 (default 2)")->check(CLI::Range(2, 3));

    auto* sweep = verify->add_subcommand("sweep", "Certify all pairs with congruent Coxeter numbers");
    sweep->add_option("--mod", o.modulus, "Modulus")->check(CLI::PositiveNumber);

    auto* rederive = app.add_subcommand("rederive", "Recover c1(h), c2(h) from diagonal restrictions");
    auto* exporter = app.add_subcommand("export", "Write lattices.json and table1.json");
    exporter->add_option("--out", o.out_dir, "Output directory");
    auto* tables = app.add_subcommand("tables", "Coefficient tables for the two mod-23 chains");

    try {
        // CLI11 expands a bare "[a,b,c]" token into a list; shield binary forms from that
        std::vector<std::string> reversed;
        for (auto it = args.rbegin(); it != args.rend(); ++it) {
            reversed.push_back(it->starts_with('[') ? kShield + *it : *it);
        }
        app.parse(reversed);
        for (auto& f : o.forms) {
            f = unshield(f);
        }
        o.lattice = unshield(o.lattice);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInconclusive;
    }

    try {
        if (*list) {
            return cmd_list(o, out);
        }
        if (*theta) {
            return cmd_theta(o, out);
        }
        if (*identity) {
            return cmd_verify_identity(o, out);
        }
        if (*congruence) {
            return cmd_verify_congruence(o, out);
        }
        if (*singular) {
            return cmd_verify_singular(o, out);
        }
        if (*kernel) {
            return cmd_verify_kernel(o, out);
        }
        if (*sweep) {
            return cmd_verify_sweep(o, out);
        }
        if (*rederive) {
            return cmd_rederive(o, out);
        }
        if (*exporter) {
            return cmd_export(o, out);
        }
        if (*tables) {
            return cmd_tables(o, out);
        }
    } catch (const BudgetExceeded& e) {
        err << "resource limit: " << e.what() << '\n';
        return kInconclusive;
    } catch (const WeightMismatch& e) {
        err << "refused: " << e.what() << '\n';
        return kInconclusive;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInconclusive;
    }
    return kInconclusive;
}

} // namespace niemeier::cli
