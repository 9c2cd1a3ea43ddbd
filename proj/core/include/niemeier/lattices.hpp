#pragma once

// Root lattices, glue codes and the catalog of the 24 Niemeier lattices.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "niemeier/exactmath.hpp"
#include "niemeier/gram.hpp"
#include "niemeier/linalg.hpp"

namespace niemeier {

struct RootComponent {
    char family = 'A';  ///< 'A', 'D' or 'E'
    int rank = 1;

    /// Throws std::invalid_argument for A_0, D_n with n < 4, E_n outside 6..8.
    void validate() const;
    /// Order of the dual quotient L^#/L.
    int glue_order() const;
    int coxeter_number() const;
    int root_count() const;
    std::string to_string() const;  ///< "D16"

    static RootComponent parse(std::string_view text);

    friend bool operator==(const RootComponent&, const RootComponent&) = default;
};

/// Cartan matrix in the Bourbaki simple-root numbering.
GramMatrix root_gram(const RootComponent& component);

/// Fundamental-weight representative of a dual-quotient class, in simple-root
/// coordinates. Label 0 gives the zero vector.
std::vector<Rational> glue_vector(const RootComponent& component, int label);

/// Basis (12 rows of 24 bits) of the extended binary Golay code.
std::vector<std::vector<int>> golay_code_basis();

/// Gram matrix of the lattice spanned by the rational row vectors `generators`
/// with respect to the ambient form `ambient`. Throws std::runtime_error if the
/// resulting Gram matrix is not integral.
GramMatrix lattice_from_generators(const RatMatrix& ambient, const RatMatrix& generators);

/// LLL-reduced copy (the lattice is unchanged).
GramMatrix lll_reduced(const GramMatrix& gram);

struct NiemeierDescriptor {
    std::string name;    ///< ASCII letter name: "alpha" ... "omega"
    std::string symbol;  ///< Greek letter
    std::vector<RootComponent> components;
    std::vector<std::vector<int>> glue_generators;
    int coxeter_number = 0;
    GramMatrix gram;

    std::string components_string() const;  ///< "D16E8", "A1^24", "Leech"
};

/// "D16E8", "A1^24"; "Leech" for an empty list.
std::string components_label(const std::vector<RootComponent>& components);

class LatticeValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The 24 ASCII names in catalog order (decreasing Coxeter number).
const std::vector<std::string>& niemeier_names();

/// Maps "alpha", Greek letters, and "o" to the canonical ASCII name.
std::optional<std::string> canonical_lattice_name(std::string_view name);

/// Coxeter number recorded in the catalog.
int catalog_coxeter_number(std::string_view name);
std::string catalog_symbol(std::string_view name);
std::vector<RootComponent> catalog_components(std::string_view name);

/// Builds and validates (det 1, even, positive definite, 24h roots).
/// Throws LatticeValidationError naming the violated invariant.
NiemeierDescriptor build_niemeier(std::string_view name);

/// Leech lattice from the Golay code; validated like the others.
GramMatrix build_leech();

/// Number of norm-2 vectors divided by 24. Throws LatticeValidationError when
/// this disagrees with the catalog.
int coxeter_number(const NiemeierDescriptor& descriptor);

nlohmann::json to_json(const NiemeierDescriptor& descriptor);

} // namespace niemeier
