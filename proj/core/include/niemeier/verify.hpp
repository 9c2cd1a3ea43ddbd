#pragma once

// Identity checks, Sturm-certified congruences, mod-p singular rank and theta
// operator kernel checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "niemeier/context.hpp"

namespace niemeier {

struct CoefficientMismatch {
    IndexMatrix t;
    Rational enumerated;
    Rational formula;
};

struct IdentityReport {
    std::string form;
    int degree = 0;
    std::int64_t h = 0;
    std::size_t box_size = 0;
    std::vector<CoefficientMismatch> mismatches;

    bool holds() const { return mismatches.empty(); }
};

/// Enumerated theta vs the expression in h on the degree's Sturm box.
IdentityReport verify_identity(ThetaContext& ctx, const std::string& name, int degree);

enum class Verdict { certified, refuted, inconclusive };
std::string to_string(Verdict v);

struct ResidueRecord {
    IndexMatrix t;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

class WeightMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CongruenceCertificate {
    std::string lhs;
    std::string rhs;
    std::int64_t modulus = 0;
    int degree = 0;
    std::int64_t weight = 0;
    std::int64_t sturm_bound = 0;
    std::int64_t box_max_tii = 0;
    std::vector<ResidueRecord> records;
    Verdict verdict = Verdict::inconclusive;
    std::optional<ResidueRecord> witness;
    std::vector<std::string> notes;
};

/// Weight used for Sturm reasoning modulo m: 12 for Niemeier lattices; for a
/// binary form S with det(2S) = m prime, m = 3 mod 4 and m >= 2n + 3 the theta
/// series is congruent to a form of weight (m + 1) / 2; otherwise its own weight.
std::int64_t effective_weight(ThetaContext& ctx, const std::string& form, std::int64_t m, int degree);

/// Compares residues mod m on the diagonal box t_ii <= max_tii (default: the
/// Sturm bound). Throws WeightMismatch when the effective weights differ.
CongruenceCertificate certify_congruence(ThetaContext& ctx, const std::string& lhs, const std::string& rhs,
                                         std::int64_t m, int degree = 3,
                                         std::optional<std::int64_t> max_tii = std::nullopt);

struct SingularRankReport {
    std::string form;
    std::int64_t p = 0;
    int degree = 3;
    int rank = 0;  ///< largest rank with a nonzero residue found
    std::size_t checked_full_rank = 0;
    std::size_t scanned_lower_rank = 0;
    std::optional<ResidueRecord> witness;  ///< rhs holds the residue; t is of degree 3
    std::string witness_source;            ///< "enumerated" or "degree-2 formula"/"degree-2 enumerated"
    Verdict verdict = Verdict::inconclusive;

    bool singular() const { return verdict == Verdict::certified && rank < degree; }
};

/// Scans the degree-3 Sturm box plus rank-2 indices embedded from degree 2
/// (t11 <= 2, t22 <= 6) in the order trace, t11, -b.
SingularRankReport singular_rank_mod_p(ThetaContext& ctx, const std::string& form, std::int64_t p);

struct ThetaKernelReport {
    std::string form;
    std::int64_t p = 0;
    int degree = 2;
    std::size_t checked = 0;
    std::optional<ResidueRecord> witness;  ///< lhs = a(F;T) mod p, rhs = det(2T) a(F;T) mod p

    bool passes() const { return !witness.has_value(); }
};

/// det(2T) a(F;T) = 0 mod p on t_ii <= max_tii (degree 2: 3; degree 3: Sturm box).
ThetaKernelReport theta_kernel_check(ThetaContext& ctx, const std::string& form, std::int64_t p, int degree = 2);

struct SweepEntry {
    std::string lhs;
    std::string rhs;
    std::int64_t h_lhs = 0;
    std::int64_t h_rhs = 0;
    Verdict verdict = Verdict::inconclusive;
};

/// Degree-3 certificates for all 276 pairs of Niemeier lattices.
std::vector<SweepEntry> coxeter_congruence_sweep(ThetaContext& ctx, std::int64_t m);

nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const CongruenceCertificate& c);
nlohmann::json to_json(const SingularRankReport& r);
nlohmann::json to_json(const ThetaKernelReport& r);
nlohmann::json to_json(const std::vector<SweepEntry>& sweep, std::int64_t m);

/// The four coefficient tables for the two mod-23 chains.
std::string congruence_tables(ThetaContext& ctx);

} // namespace niemeier
