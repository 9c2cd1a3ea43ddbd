#pragma once

// Exact short-vector enumeration (Fincke-Pohst with integer Bareiss bounds) and
// representation counts a(theta; T) = #{X : S[X] = 2T}.

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "niemeier/gram.hpp"
#include "niemeier/index_matrix.hpp"

namespace niemeier {

class FourierExpansion;

struct Budget {
    std::uint64_t max_vectors = 50'000'000;
    std::uint64_t max_nodes = 10'000'000'000ULL;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All lattice vectors of norm <= max_norm, grouped by norm. Vectors are
/// stored in the coordinates of the input Gram matrix.
class ShellTable {
public:
    ShellTable() = default;
    ShellTable(GramMatrix gram, std::int64_t max_norm, std::map<std::int64_t, std::vector<std::int32_t>> shells);

    const GramMatrix& gram() const { return gram_; }
    std::int64_t max_norm() const { return max_norm_; }
    std::size_t dim() const { return gram_.dim(); }

    /// Number of vectors of the given norm (0 for norms without vectors).
    std::size_t size(std::int64_t norm) const;
    /// Flat storage, dim() entries per vector.
    std::span<const std::int32_t> shell(std::int64_t norm) const;
    std::span<const std::int32_t> vector(std::int64_t norm, std::size_t index) const;
    std::vector<std::int64_t> norms() const;

private:
    GramMatrix gram_;
    std::int64_t max_norm_ = 0;
    std::map<std::int64_t, std::vector<std::int32_t>> shells_;
};

ShellTable short_vectors(const GramMatrix& gram, std::int64_t max_norm, const Budget& budget = {});

/// counts[m] = #{x : S[x] = m} for m = 0..max_norm, without storing vectors.
std::vector<std::uint64_t> count_by_norm(const GramMatrix& gram, std::int64_t max_norm, const Budget& budget = {});

/// Representation counts for one Gram matrix. Shells are enumerated lazily and
/// reused; results are memoized by the signed-permutation class of T.
class ThetaCounter {
public:
    explicit ThetaCounter(GramMatrix gram, Budget budget = {});

    const GramMatrix& gram() const { return gram_; }
    const Budget& budget() const { return budget_; }

    std::uint64_t count(const IndexMatrix& t);

private:
    void ensure_shells(std::int64_t max_norm);
    std::uint64_t count_uncached(const IndexMatrix& t);
    const std::vector<std::int64_t>& dual_shell(std::int64_t norm);

    GramMatrix gram_;
    Budget budget_;
    ShellTable shells_;
    std::map<std::int64_t, std::vector<std::int64_t>> dual_;  // G x for each shell vector
    std::map<IndexMatrix, std::uint64_t> memo_;
    // (m1, m2) -> {x.y -> #pairs}; one pass serves every off-diagonal entry
    std::map<std::pair<std::int64_t, std::int64_t>, std::map<std::int64_t, std::uint64_t>> pair_hist_;
    std::mutex mutex_;
};

std::uint64_t count_representations(const GramMatrix& gram, const IndexMatrix& t, const Budget& budget = {});

/// Enumerated theta series on the given box (weight = dim / 2).
FourierExpansion theta_expansion(const GramMatrix& gram, int degree, const Box& box, const Budget& budget = {});
FourierExpansion theta_expansion(ThetaCounter& counter, int degree, const Box& box);

} // namespace niemeier
