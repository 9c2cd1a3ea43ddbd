#pragma once

// On-disk cache of enumerated theta coefficients. One record per line:
//   name degree t11,t22,t33,b12,b13,b23 value
// after a schema header. Lines that fail to parse are ignored.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "niemeier/index_matrix.hpp"

namespace niemeier {

class CoefficientCache {
public:
    static constexpr const char* kSchema = "# niemeier-theta coefficient cache v1";
    static constexpr const char* kFileName = "coefficients.txt";

    /// An empty directory keeps the cache in memory only.
    explicit CoefficientCache(std::filesystem::path directory = {});
    ~CoefficientCache();

    CoefficientCache(const CoefficientCache&) = delete;
    CoefficientCache& operator=(const CoefficientCache&) = delete;

    std::optional<std::uint64_t> lookup(const std::string& form, const IndexMatrix& t) const;
    void store(const std::string& form, const IndexMatrix& t, std::uint64_t value);

    /// Writes all records through a temporary file and an atomic rename.
    void flush();

    std::size_t size() const;
    std::size_t ignored_lines() const { return ignored_; }
    std::filesystem::path file() const;

private:
    using Key = std::tuple<std::string, int, IndexMatrix>;

    void load();

    std::filesystem::path directory_;
    std::map<Key, std::uint64_t> records_;
    std::size_t ignored_ = 0;
    bool dirty_ = false;
    mutable std::mutex mutex_;
};

} // namespace niemeier
