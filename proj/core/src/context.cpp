#include "niemeier/context.hpp"

#include <algorithm>

namespace niemeier {

ThetaContext::ThetaContext(ContextOptions options) : options_(std::move(options)), cache_(options_.cache_dir) {}

ThetaContext::~ThetaContext() = default;

std::string ThetaContext::canonical_form(std::string_view id) {
    if (!id.empty() && id.front() == '[') {
        const IndexMatrix t = IndexMatrix::parse(id);
        if (t.degree() != 2) {
            throw std::invalid_argument("binary form expected as [a,b,c]: '" + std::string(id) + "'");
        }
        binary_form(t.t(0), t.twice(0, 1), t.t(1));  // validates
        return t.bracket_string();
    }
    const auto name = canonical_lattice_name(id);
    if (!name) {
        throw std::invalid_argument("unknown form '" + std::string(id) + "'");
    }
    return *name;
}

bool ThetaContext::is_lattice(std::string_view canonical_id) { return !canonical_id.starts_with("["); }

const NiemeierDescriptor& ThetaContext::lattice(std::string_view name) {
    const std::string key = canonical_form(name);
    if (!is_lattice(key)) {
        throw std::invalid_argument("'" + key + "' is not a Niemeier lattice");
    }
    auto it = lattices_.find(key);
    if (it == lattices_.end()) {
        it = lattices_.emplace(key, std::make_unique<NiemeierDescriptor>(build_niemeier(key))).first;
    }
    return *it->second;
}

const GramMatrix& ThetaContext::gram(std::string_view form) {
    const std::string key = canonical_form(form);
    if (is_lattice(key)) {
        return lattice(key).gram;
    }
    auto it = binary_.find(key);
    if (it == binary_.end()) {
        const IndexMatrix t = IndexMatrix::parse(key);
        it = binary_.emplace(key, binary_form(t.t(0), t.twice(0, 1), t.t(1))).first;
    }
    return it->second;
}

std::int64_t ThetaContext::weight(std::string_view form) {
    return static_cast<std::int64_t>(gram(form).dim()) / 2;
}

std::optional<std::int64_t> ThetaContext::coxeter_number(std::string_view form) {
    const std::string key = canonical_form(form);
    if (!is_lattice(key)) {
        return std::nullopt;
    }
    return lattice(key).coxeter_number;
}

ThetaCounter& ThetaContext::counter(const std::string& form) {
    auto it = counters_.find(form);
    if (it == counters_.end()) {
        it = counters_.emplace(form, std::make_unique<ThetaCounter>(gram(form), options_.budget)).first;
    }
    return *it->second;
}

std::uint64_t ThetaContext::theta_coefficient(std::string_view form, const IndexMatrix& t) {
    const std::string key = canonical_form(form);
    if (const auto cached = cache_.lookup(key, t)) {
        return *cached;
    }
    std::uint64_t value = 0;
    try {
        value = counter(key).count(t);
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(std::string(e.what()) + " while counting " + key + " at " + t.bracket_string());
    }
    cache_.store(key, t, value);
    return value;
}

FourierExpansion ThetaContext::theta(std::string_view form, int degree, const Box& box) {
    const std::string key = canonical_form(form);
    FourierExpansion f(degree, Rational(BigInt(static_cast<long>(gram(key).dim())), BigInt(2)));
    for (const auto& t : box) {
        if (t.degree() != degree) {
            throw std::invalid_argument("theta: index degree mismatch");
        }
        f.set(t, Rational(BigInt(static_cast<unsigned long>(theta_coefficient(key, t)))));
    }
    return f;
}

const Degree3Basis& ThetaContext::degree3_basis(const Box& box) {
    auto it = bases_.find(box);
    if (it == bases_.end()) {
        auto basis = std::make_unique<Degree3Basis>(solve_degree3_basis(theta("gamma", 3, box), theta("omega", 3, box),
                                                                        theta("psi", 3, box), theta("alpha", 3, box)));
        it = bases_.emplace(box, std::move(basis)).first;
    }
    return *it->second;
}

const Degree3Basis& ThetaContext::degree3_basis() { return degree3_basis(sturm_box(3, 12)); }

FourierExpansion ThetaContext::formula(std::string_view name, int degree, const Box& box) {
    const auto h = coxeter_number(name);
    if (!h) {
        throw std::invalid_argument("formula: '" + std::string(name) + "' is not a Niemeier lattice");
    }
    switch (degree) {
    case 1: {
        std::int64_t max_n = 0;
        for (const auto& t : box) {
            max_n = std::max(max_n, t.t(0));
        }
        return theta1_via_formula(*h, max_n).restricted(box);
    }
    case 2:
        return theta2_via_formula(*h, box);
    case 3: {
        const Box sturm = sturm_box(3, 12);
        const bool inside = std::all_of(box.begin(), box.end(), [&](const auto& t) { return box_contains(sturm, t); });
        return theta3_via_formula(*h, inside ? degree3_basis() : degree3_basis(down_closure(box)), box);
    }
    default:
        throw std::invalid_argument("formula: degree must be 1, 2 or 3");
    }
}

} // namespace niemeier
