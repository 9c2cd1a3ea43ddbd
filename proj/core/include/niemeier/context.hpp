#pragma once

// Shared state for a run: lattice catalog, per-form counters, the coefficient
// cache and the degree-3 basis. Forms are identified by a Niemeier name or a
// binary form "[a,b,c]".

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "niemeier/coefficient_cache.hpp"
#include "niemeier/enumeration.hpp"
#include "niemeier/forms3.hpp"
#include "niemeier/fourier.hpp"
#include "niemeier/lattices.hpp"

namespace niemeier {

struct ContextOptions {
    Budget budget;
    std::filesystem::path cache_dir;
};

class ThetaContext {
public:
    explicit ThetaContext(ContextOptions options = {});
    ~ThetaContext();

    /// Canonical identifier: ASCII lattice name or "[a,b,c]". Throws std::invalid_argument.
    static std::string canonical_form(std::string_view id);
    static bool is_lattice(std::string_view canonical_id);

    const NiemeierDescriptor& lattice(std::string_view name);
    const GramMatrix& gram(std::string_view form);
    /// Half the rank: 12 for Niemeier lattices, 1 for binary forms.
    std::int64_t weight(std::string_view form);
    std::optional<std::int64_t> coxeter_number(std::string_view form);

    /// Enumerated theta coefficients on `box` (through the cache).
    FourierExpansion theta(std::string_view form, int degree, const Box& box);
    std::uint64_t theta_coefficient(std::string_view form, const IndexMatrix& t);

    /// Degree-3 basis solved from gamma, omega, psi, alpha on `box` (default: Sturm box).
    const Degree3Basis& degree3_basis(const Box& box);
    const Degree3Basis& degree3_basis();

    /// Expression in h for a Niemeier lattice on `box`; degree 3 needs box
    /// inside the basis box.
    FourierExpansion formula(std::string_view name, int degree, const Box& box);

    CoefficientCache& cache() { return cache_; }
    const ContextOptions& options() const { return options_; }
    void flush_cache() { cache_.flush(); }

private:
    ThetaCounter& counter(const std::string& form);

    ContextOptions options_;
    CoefficientCache cache_;
    std::map<std::string, std::unique_ptr<NiemeierDescriptor>> lattices_;
    std::map<std::string, GramMatrix> binary_;
    std::map<std::string, std::unique_ptr<ThetaCounter>> counters_;
    std::map<Box, std::unique_ptr<Degree3Basis>> bases_;
};

} // namespace niemeier
