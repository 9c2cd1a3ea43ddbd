#include "niemeier/lattices.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "niemeier/enumeration.hpp"

namespace niemeier {

void RootComponent::validate() const {
    switch (family) {
    case 'A':
        if (rank >= 1) {
            return;
        }
        break;
    case 'D':
        if (rank >= 4) {
            return;
        }
        break;
    case 'E':
        if (rank >= 6 && rank <= 8) {
            return;
        }
        break;
    default:
        break;
    }
    throw std::invalid_argument("invalid root component " + std::string(1, family) + std::to_string(rank));
}

int RootComponent::glue_order() const {
    validate();
    switch (family) {
    case 'A':
        return rank + 1;
    case 'D':
        return 4;
    default:
        return 9 - rank;
    }
}

int RootComponent::coxeter_number() const {
    validate();
    switch (family) {
    case 'A':
        return rank + 1;
    case 'D':
        return 2 * rank - 2;
    default:
        return rank == 6 ? 12 : (rank == 7 ? 18 : 30);
    }
}

int RootComponent::root_count() const { return rank * coxeter_number(); }

std::string RootComponent::to_string() const { return std::string(1, family) + std::to_string(rank); }

RootComponent RootComponent::parse(std::string_view text) {
    if (text.size() < 2) {
        throw std::invalid_argument("cannot parse root component '" + std::string(text) + "'");
    }
    RootComponent c;
    c.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    c.rank = std::stoi(std::string(text.substr(1)));
    c.validate();
    return c;
}

GramMatrix root_gram(const RootComponent& component) {
    component.validate();
    const auto n = static_cast<std::size_t>(component.rank);
    std::vector<std::int64_t> g(n * n, 0);
    auto link = [&](std::size_t i, std::size_t j) {
        g[i * n + j] = -1;
        g[j * n + i] = -1;
    };
    for (std::size_t i = 0; i < n; ++i) {
        g[i * n + i] = 2;
    }
    switch (component.family) {
    case 'A':
        for (std::size_t i = 0; i + 1 < n; ++i) {
            link(i, i + 1);
        }
        break;
    case 'D':
        for (std::size_t i = 0; i + 2 < n; ++i) {
            link(i, i + 1);
        }
        link(n - 3, n - 1);
        break;
    default:
        // 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2);
        link(1, 3);
        for (std::size_t i = 2; i + 1 < n; ++i) {
            link(i, i + 1);
        }
        break;
    }
    return GramMatrix(n, std::move(g));
}

namespace {

std::vector<Rational> fundamental_weight(const RootComponent& component, int index) {
    const GramMatrix cartan = root_gram(component);
    const std::size_t n = cartan.dim();
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = Rational(static_cast<long>(cartan(i, j)));
        }
    }
    std::vector<Rational> e(n);
    e[static_cast<std::size_t>(index)] = Rational(1);
    auto solution = solve_linear(std::move(a), std::move(e));
    if (!solution) {
        throw std::logic_error("singular Cartan matrix");
    }
    return *solution;
}

} // namespace

std::vector<Rational> glue_vector(const RootComponent& component, int label) {
    const int order = component.glue_order();
    if (label < 0 || label >= order) {
        throw std::invalid_argument("glue label " + std::to_string(label) + " out of range for " +
                                    component.to_string());
    }
    const int n = component.rank;
    if (label == 0) {
        return std::vector<Rational>(static_cast<std::size_t>(n));
    }
    switch (component.family) {
    case 'A':
        return fundamental_weight(component, label - 1);
    case 'D':
        // [1] spinor, [2] vector, [3] other spinor
        if (label == 1) {
            return fundamental_weight(component, n - 1);
        }
        if (label == 2) {
            return fundamental_weight(component, 0);
        }
        return fundamental_weight(component, n - 2);
    default:
        if (n == 6) {
            return fundamental_weight(component, label == 1 ? 0 : 5);
        }
        return fundamental_weight(component, 6);
    }
}

std::vector<std::vector<int>> golay_code_basis() {
    constexpr int kLength = 23;
    const std::array<int, 11> residues{1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18};
    std::vector<std::vector<int>> rows;
    for (int shift = 0; shift < kLength; ++shift) {
        std::vector<int> word(24, 0);
        for (const int r : residues) {
            word[static_cast<std::size_t>((r + shift) % kLength)] = 1;
        }
        word[23] = std::accumulate(word.begin(), word.begin() + kLength, 0) % 2;
        rows.push_back(std::move(word));
    }
    // Row reduce over GF(2).
    std::vector<std::vector<int>> basis;
    std::size_t col = 0;
    while (!rows.empty() && col < 24) {
        auto pivot = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r[col] == 1; });
        if (pivot == rows.end()) {
            ++col;
            continue;
        }
        std::vector<int> p = *pivot;
        rows.erase(pivot);
        for (auto& r : rows) {
            if (r[col] == 1) {
                for (std::size_t j = 0; j < 24; ++j) {
                    r[j] ^= p[j];
                }
            }
        }
        for (auto& b : basis) {
            if (b[col] == 1) {
                for (std::size_t j = 0; j < 24; ++j) {
                    b[j] ^= p[j];
                }
            }
        }
        basis.push_back(std::move(p));
        ++col;
    }
    return basis;
}

GramMatrix lattice_from_generators(const RatMatrix& ambient, const RatMatrix& generators) {
    const std::size_t dim = ambient.rows();
    if (generators.cols() != dim) {
        throw std::invalid_argument("lattice_from_generators: generator length mismatch");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < generators.rows(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), generators(i, j).den().get_mpz_t());
        }
    }
    IntMatrix scaled(generators.rows(), dim);
    for (std::size_t i = 0; i < generators.rows(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            scaled(i, j) = (generators(i, j) * Rational(scale)).to_integer();
        }
    }
    const IntMatrix h = hermite_normal_form(std::move(scaled));
    if (h.rows() != dim) {
        throw std::runtime_error("lattice_from_generators: generators do not span a full-rank lattice");
    }
    RatMatrix basis(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            basis(i, j) = Rational(h(i, j), scale);
        }
    }
    const RatMatrix gram = basis * ambient * basis.transpose();
    std::vector<std::int64_t> entries(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (!gram(i, j).is_integer()) {
                throw std::runtime_error("lattice_from_generators: Gram entry " + gram(i, j).to_string() +
                                         " is not integral");
            }
            const BigInt v = gram(i, j).to_integer();
            if (!v.fits_slong_p()) {
                throw std::overflow_error("lattice_from_generators: Gram entry too large");
            }
            entries[i * dim + j] = v.get_si();
        }
    }
    return GramMatrix(dim, std::move(entries));
}

GramMatrix lll_reduced(const GramMatrix& gram) {
    return GramMatrix::from_int_matrix(lll_reduce_gram(gram.to_int_matrix()).gram);
}

namespace {

struct CatalogEntry {
    const char* name;
    const char* symbol;
    const char* components;  // space separated, e.g. "A5 A5 A5 A5 D4"
    int h;
    std::vector<const char*> glue;  // Conway-Sloane notation; "(...)" = all cyclic shifts
};

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"alpha", "α", "D24", 46, {"1"}},
        {"beta", "β", "D16 E8", 30, {"10"}},
        {"gamma", "γ", "E8 E8 E8", 30, {}},
        {"delta", "δ", "A24", 25, {"5"}},
        {"epsilon", "ε", "D12 D12", 22, {"12", "21"}},
        {"zeta", "ζ", "A17 E7", 18, {"31"}},
        {"eta", "η", "D10 E7 E7", 18, {"110", "301"}},
        {"theta", "θ", "A15 D9", 16, {"21"}},
        {"iota", "ι", "D8 D8 D8", 14, {"(122)"}},
        {"kappa", "κ", "A12 A12", 13, {"15"}},
        {"lambda", "λ", "A11 D7 E6", 12, {"111"}},
        {"mu", "μ", "E6 E6 E6 E6", 12, {"1(012)"}},
        {"nu", "ν", "A9 A9 D6", 10, {"240", "501", "053"}},
        {"xi", "ξ", "D6 D6 D6 D6", 10, {"even:0123"}},
        {"omicron", "ο", "A8 A8 A8", 9, {"(114)"}},
        {"pi", "π", "A7 A7 D5 D5", 8, {"1112", "1721"}},
        {"rho", "ρ", "A6 A6 A6 A6", 7, {"1(216)"}},
        {"sigma", "σ", "A5 A5 A5 A5 D4", 6, {"2(024)0", "33001", "30302", "30033"}},
        {"tau", "τ", "D4 D4 D4 D4 D4 D4", 6, {"111111", "222222", "0(02332)"}},
        {"upsilon", "υ", "A4 A4 A4 A4 A4 A4", 5, {"1(01441)"}},
        {"phi", "φ", "A3 A3 A3 A3 A3 A3 A3 A3", 4, {"3(2001011)"}},
        {"chi", "χ", "A2 A2 A2 A2 A2 A2 A2 A2 A2 A2 A2 A2", 3, {"2(11211122212)"}},
        {"psi", "ψ", "A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1 A1", 2, {"golay"}},
        {"omega", "ω", "", 0, {}},
    };
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
    const auto canonical = canonical_lattice_name(name);
    if (!canonical) {
        throw std::invalid_argument("unknown Niemeier lattice '" + std::string(name) + "'");
    }
    for (const auto& e : catalog()) {
        if (*canonical == e.name) {
            return e;
        }
    }
    throw std::logic_error("catalog lookup failed");
}

std::vector<int> digits(std::string_view s) {
    std::vector<int> out;
    for (const char c : s) {
        out.push_back(c - '0');
    }
    return out;
}

std::vector<std::vector<int>> expand_glue(std::string_view text) {
    std::vector<std::vector<int>> out;
    if (text == "golay") {
        return golay_code_basis();
    }
    if (text.starts_with("even:")) {
        std::vector<int> base = digits(text.substr(5));
        std::vector<int> perm(base.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                for (std::size_t j = i + 1; j < perm.size(); ++j) {
                    inversions += perm[i] > perm[j] ? 1 : 0;
                }
            }
            if (inversions % 2 == 0) {
                std::vector<int> word;
                for (const int p : perm) {
                    word.push_back(base[static_cast<std::size_t>(p)]);
                }
                out.push_back(std::move(word));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        out.push_back(digits(text));
        return out;
    }
    const auto close = text.find(')', open);
    const std::vector<int> head = digits(text.substr(0, open));
    const std::vector<int> cycle = digits(text.substr(open + 1, close - open - 1));
    const std::vector<int> tail = digits(text.substr(close + 1));
    for (std::size_t shift = 0; shift < cycle.size(); ++shift) {
        std::vector<int> word = head;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            word.push_back(cycle[(i + shift) % cycle.size()]);
        }
        word.insert(word.end(), tail.begin(), tail.end());
        out.push_back(std::move(word));
    }
    return out;
}

std::vector<RootComponent> parse_components(const char* text) {
    std::vector<RootComponent> out;
    std::string token;
    for (const char* p = text;; ++p) {
        if (*p == ' ' || *p == '\0') {
            if (!token.empty()) {
                out.push_back(RootComponent::parse(token));
                token.clear();
            }
            if (*p == '\0') {
                break;
            }
        } else {
            token += *p;
        }
    }
    return out;
}

void validate_unimodular_even(const GramMatrix& gram, const std::string& what) {
    if (!gram.is_even()) {
        throw LatticeValidationError(what + ": Gram matrix is not even");
    }
    if (!gram.is_positive_definite()) {
        throw LatticeValidationError(what + ": Gram matrix is not positive definite");
    }
    const BigInt det = gram.determinant();
    if (det != 1) {
        throw LatticeValidationError(what + ": determinant is " + det.get_str() + ", expected 1");
    }
}

} // namespace

const std::vector<std::string>& niemeier_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : catalog()) {
            out.emplace_back(e.name);
        }
        return out;
    }();
    return names;
}

std::optional<std::string> canonical_lattice_name(std::string_view name) {
    std::string lower;
    for (const char c : name) {
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (lower == "o") {
        return std::string("omicron");
    }
    if (lower == "leech") {
        return std::string("omega");
    }
    for (const auto& e : catalog()) {
        if (lower == e.name || name == e.symbol) {
            return std::string(e.name);
        }
    }
    return std::nullopt;
}

int catalog_coxeter_number(std::string_view name) { return catalog_entry(name).h; }

std::string catalog_symbol(std::string_view name) { return catalog_entry(name).symbol; }

std::vector<RootComponent> catalog_components(std::string_view name) {
    return parse_components(catalog_entry(name).components);
}

std::string NiemeierDescriptor::components_string() const { return components_label(components); }

std::string components_label(const std::vector<RootComponent>& components) {
    if (components.empty()) {
        return "Leech";
    }
    std::string out;
    std::size_t i = 0;
    while (i < components.size()) {
        std::size_t j = i;
        while (j < components.size() && components[j] == components[i]) {
            ++j;
        }
        out += components[i].to_string();
        if (j - i > 1) {
            out += "^" + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

GramMatrix build_leech() {
    constexpr std::size_t n = 24;
    RatMatrix ambient(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        ambient(i, i) = Rational(BigInt(1), BigInt(8));
    }
    std::vector<std::vector<long>> gens;
    for (const auto& word : golay_code_basis()) {
        std::vector<long> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = 2L * word[i];
        }
        gens.push_back(std::move(v));
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (const long s : {4L, -4L}) {
            std::vector<long> v(n, 0);
            v[0] = 4;
            v[i] = s;
            gens.push_back(std::move(v));
        }
    }
    std::vector<long> odd(n, 1);
    odd[0] = -3;
    gens.push_back(std::move(odd));

    RatMatrix generators(gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            generators(i, j) = Rational(gens[i][j]);
        }
    }
    GramMatrix gram = lll_reduced(lattice_from_generators(ambient, generators));
    validate_unimodular_even(gram, "Leech");
    const auto counts = count_by_norm(gram, 2);
    if (counts[2] != 0) {
        throw LatticeValidationError("Leech: found " + std::to_string(counts[2]) + " norm-2 vectors");
    }
    return gram;
}

NiemeierDescriptor build_niemeier(std::string_view name) {
    const CatalogEntry& entry = catalog_entry(name);
    NiemeierDescriptor d;
    d.name = entry.name;
    d.symbol = entry.symbol;
    d.components = parse_components(entry.components);
    d.coxeter_number = entry.h;
    if (d.components.empty()) {
        d.gram = build_leech();
        coxeter_number(d);
        return d;
    }
    for (const char* code : entry.glue) {
        for (auto& word : expand_glue(code)) {
            if (word.size() != d.components.size()) {
                throw LatticeValidationError(d.name + ": glue word length does not match the components");
            }
            d.glue_generators.push_back(std::move(word));
        }
    }

    std::size_t dim = 0;
    std::vector<std::size_t> offsets;
    for (const auto& c : d.components) {
        offsets.push_back(dim);
        dim += static_cast<std::size_t>(c.rank);
    }
    if (dim != 24) {
        throw LatticeValidationError(d.name + ": components have total rank " + std::to_string(dim));
    }
    RatMatrix ambient(dim, dim);
    for (std::size_t k = 0; k < d.components.size(); ++k) {
        const GramMatrix c = root_gram(d.components[k]);
        for (std::size_t i = 0; i < c.dim(); ++i) {
            for (std::size_t j = 0; j < c.dim(); ++j) {
                ambient(offsets[k] + i, offsets[k] + j) = Rational(static_cast<long>(c(i, j)));
            }
        }
    }
    RatMatrix generators(dim + d.glue_generators.size(), dim);
    for (std::size_t i = 0; i < dim; ++i) {
        generators(i, i) = Rational(1);
    }
    for (std::size_t g = 0; g < d.glue_generators.size(); ++g) {
        for (std::size_t k = 0; k < d.components.size(); ++k) {
            const auto v = glue_vector(d.components[k], d.glue_generators[g][k]);
            for (std::size_t i = 0; i < v.size(); ++i) {
                generators(dim + g, offsets[k] + i) = v[i];
            }
        }
    }
    GramMatrix gram;
    try {
        gram = lattice_from_generators(ambient, generators);
    } catch (const std::runtime_error& e) {
        throw LatticeValidationError(d.name + ": glue vectors are not integral (" + e.what() + ")");
    }
    d.gram = lll_reduced(gram);
    validate_unimodular_even(d.gram, d.name);
    coxeter_number(d);
    return d;
}

int coxeter_number(const NiemeierDescriptor& descriptor) {
    const auto counts = count_by_norm(descriptor.gram, 2);
    const std::uint64_t roots = counts[2];
    const int expected = catalog_coxeter_number(descriptor.name);
    if (roots != static_cast<std::uint64_t>(24 * expected)) {
        throw LatticeValidationError(descriptor.name + ": found " + std::to_string(roots) + " norm-2 vectors, expected " +
                                     std::to_string(24 * expected));
    }
    return expected;
}

nlohmann::json to_json(const NiemeierDescriptor& descriptor) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& c : descriptor.components) {
        components.push_back(c.to_string());
    }
    return {
        {"name", descriptor.name},
        {"symbol", descriptor.symbol},
        {"components", components},
        {"components_label", descriptor.components_string()},
        {"h", descriptor.coxeter_number},
        {"gram", descriptor.gram.rows()},
    };
}

} // namespace niemeier
